// Odd Jacobi theta function and the normalized bracket [x].
#pragma once

#include <complex>

#include "rsosq/errors.hpp"

namespace rsosq {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Evaluation context for the odd theta function
//
//   theta(u) = -sum_{n in Z} exp( i pi (n+1/2)^2 tau + 2 pi i (n+1/2)(u+1/2) )
//
// and the normalized bracket
//
//   [x] = theta(x/L) / ( theta'(0) / L ),
//
// an odd entire function of x with first-order zeros on the lattice
// Z L + Z L tau and derivative 1 at x = 0.  Two independent evaluation
// routes are provided: the defining series and the Jacobi triple product
//
//   [x] = (L/pi) sin(pi x/L) prod_{m>=1} (1 - p^m e(x/L))(1 - p^m e(-x/L))
//                                        / (1 - p^m)^2,
//
// with p = exp(2 pi i tau), e(y) = exp(2 pi i y).  The product form is the
// default for brackets; the series form is kept as a cross-check route.
//
// Truncation orders are chosen from trunc_tol at construction and widened
// adaptively for arguments with large imaginary part.
class ThetaContext {
public:
  ThetaContext(cplx tau, double L, double trunc_tol = 1e-15,
               double min_im_tau = 0.05);

  cplx tau() const { return tau_; }
  double L() const { return L_; }
  double trunc_tol() const { return trunc_tol_; }
  bool tau_imaginary() const { return tau_.real() == 0.0; }

  // nome p = exp(2 pi i tau)
  cplx nome() const { return p_; }
  // q = exp(i pi / L), the elementary quasi-periodicity unit
  cplx q_unit() const;

  // theta(u) by the defining series
  cplx theta(cplx u) const;
  // d theta/du by the term-wise differentiated series
  cplx theta_prime(cplx u) const;
  // d theta/du at u = 0
  cplx theta_prime0() const { return theta_prime0_; }

  // [x] via the triple product (default route)
  cplx bracket(cplx x) const;
  // [x] via the series (independent route, for cross-checks)
  cplx bracket_series(cplx x) const;
  // [x] for real x and purely imaginary tau, in pure real arithmetic;
  // requires tau_imaginary()
  double bracket_real(double x) const;

  int series_terms() const { return n_terms_; }
  int product_terms() const { return m_terms_; }

private:
  cplx tau_;
  double L_;
  double trunc_tol_;
  cplx p_;             // nome
  double abs_p_;
  int n_terms_;        // base series cutoff
  int m_terms_;        // base product cutoff
  cplx theta_prime0_;
};

} // namespace rsosq
