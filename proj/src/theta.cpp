#include "rsosq/theta.hpp"

#include <cmath>
#include <string>

namespace rsosq {

namespace {

// Largest admissible truncation order before we declare non-convergence.
constexpr int kMaxTerms = 200000;

} // namespace

ThetaContext::ThetaContext(cplx tau, double L, double trunc_tol,
                           double min_im_tau)
    : tau_(tau), L_(L), trunc_tol_(trunc_tol) {
  if (!(min_im_tau > 0.0))
    throw std::invalid_argument("theta: min_im_tau must be positive");
  if (!(tau.imag() >= min_im_tau))
    throw NonConvergent("theta: Im(tau) = " + std::to_string(tau.imag()) +
                        " is below the minimum " + std::to_string(min_im_tau));
  if (!(L > 0.0))
    throw std::invalid_argument("theta: period L must be positive");
  if (!(trunc_tol > 0.0 && trunc_tol < 1.0))
    throw std::invalid_argument("theta: trunc_tol must lie in (0,1)");

  p_ = std::exp(cplx(0.0, 2.0 * kPi) * tau_);
  abs_p_ = std::abs(p_);
  const double target = trunc_tol_ / 10.0;
  const double im_tau = tau_.imag();

  int N = 1;
  while (std::exp(-kPi * im_tau * (N + 0.5) * (N + 0.5)) >= target) {
    if (++N > kMaxTerms)
      throw NonConvergent("theta: series cutoff exceeds limit");
  }
  n_terms_ = N;

  int M = 1;
  while (std::pow(abs_p_, M) >= target) {
    if (++M > kMaxTerms)
      throw NonConvergent("theta: product cutoff exceeds limit");
  }
  m_terms_ = M;

  // theta'(0) = 4 pi sum_{n>=0} (-1)^n (n+1/2) exp(i pi tau (n+1/2)^2)
  cplx s = 0.0;
  for (int n = n_terms_; n >= 0; --n) {
    const double h = n + 0.5;
    const cplx term = h * std::exp(cplx(0.0, kPi) * tau_ * (h * h));
    s += (n % 2 == 0) ? term : -term;
  }
  theta_prime0_ = 4.0 * kPi * s;
}

cplx ThetaContext::q_unit() const {
  return std::exp(cplx(0.0, kPi / L_));
}

cplx ThetaContext::theta(cplx u) const {
  // Pairing n and -n-1 gives theta(u) = -2 sum_{n>=0} q2^{(n+1/2)^2} *
  // cos(2 pi (n+1/2)(u+1/2)).  Terms grow with |Im u|, so widen the cutoff
  // by |Im u| / Im tau.
  const double im_tau = tau_.imag();
  const int bump =
      static_cast<int>(std::ceil(std::abs(u.imag()) / im_tau)) + 1;
  const int N = n_terms_ + bump;
  if (N > kMaxTerms)
    throw NonConvergent("theta: argument too far from the real axis");
  const cplx w = u + 0.5;
  cplx s = 0.0;
  for (int n = N; n >= 0; --n) {
    const double h = n + 0.5;
    s += std::exp(cplx(0.0, kPi) * tau_ * (h * h)) *
         std::cos(2.0 * kPi * h * w);
  }
  return -2.0 * s;
}

cplx ThetaContext::theta_prime(cplx u) const {
  const double im_tau = tau_.imag();
  const int bump =
      static_cast<int>(std::ceil(std::abs(u.imag()) / im_tau)) + 1;
  const int N = n_terms_ + bump;
  if (N > kMaxTerms)
    throw NonConvergent("theta: argument too far from the real axis");
  const cplx w = u + 0.5;
  cplx s = 0.0;
  for (int n = N; n >= 0; --n) {
    const double h = n + 0.5;
    s += h * std::exp(cplx(0.0, kPi) * tau_ * (h * h)) *
         std::sin(2.0 * kPi * h * w);
  }
  return 4.0 * kPi * s;
}

cplx ThetaContext::bracket_series(cplx x) const {
  return theta(x / L_) / (theta_prime0_ / L_);
}

cplx ThetaContext::bracket(cplx x) const {
  const double im_tau = tau_.imag();
  const int bump =
      static_cast<int>(std::ceil(std::abs(x.imag()) / (L_ * im_tau))) + 1;
  const int M = m_terms_ + bump;
  if (M > kMaxTerms)
    throw NonConvergent("bracket: argument too far from the real axis");
  const cplx z = std::exp(cplx(0.0, 2.0 * kPi) * (x / L_));
  const cplx zi = 1.0 / z;
  cplx out = (L_ / kPi) * std::sin(kPi * x / L_);
  cplx pm = 1.0;
  for (int m = 1; m <= M; ++m) {
    pm *= p_;
    const cplx d = 1.0 - pm;
    out *= (1.0 - pm * z) * (1.0 - pm * zi) / (d * d);
  }
  return out;
}

double ThetaContext::bracket_real(double x) const {
  if (!tau_imaginary())
    throw std::invalid_argument(
        "bracket_real: requires purely imaginary tau");
  // For tau = i t the nome p = exp(-2 pi t) is real, so [x] is real for
  // real x and the whole product can run in double arithmetic.
  const double p = abs_p_;
  double out = (L_ / kPi) * std::sin(kPi * x / L_);
  const double c = std::cos(2.0 * kPi * x / L_);
  double pm = 1.0;
  for (int m = 1; m <= m_terms_; ++m) {
    pm *= p;
    const double d = 1.0 - pm;
    // (1 - pm e(x/L))(1 - pm e(-x/L)) = 1 - 2 pm cos(2 pi x/L) + pm^2
    out *= (1.0 - 2.0 * pm * c + pm * pm) / (d * d);
  }
  return out;
}

} // namespace rsosq
