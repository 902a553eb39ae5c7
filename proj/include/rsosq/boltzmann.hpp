// Face weights, the G-factors, crossing multipliers and square-root policy.
#pragma once

#include <map>
#include <memory>
#include <optional>

#include "rsosq/graded.hpp"
#include "rsosq/groupoid.hpp"
#include "rsosq/theta.hpp"

namespace rsosq {

// How square roots of weight-dependent radicands are taken.
//
//  strict_real: requires purely imaginary tau; radicands must be real, and
//    negative values beyond zero_tol raise NegativeRadicand (values within
//    the tolerance clamp to zero).  This is the default and matches the
//    regime where all restricted face weights are real.
//  principal_complex: principal branch of the complex square root; no
//    positivity requirement.
enum class SqrtMode { strict_real, principal_complex };

SqrtMode sqrt_mode_from_string(const std::string& s);
std::string sqrt_mode_to_string(SqrtMode m);

// Evaluation context for the face weights of one model at fixed tau.
//
// An optional L_override replaces the bracket period L by a larger value
// while keeping the crossing parameter of the model; this is used to probe
// the unrestricted weights at dynamical weights outside the restricted
// window, where the model's own period would put arguments on bracket
// zeros.
class WeightContext {
public:
  WeightContext(std::shared_ptr<const Groupoid> g, cplx tau,
                SqrtMode mode = SqrtMode::strict_real, double zero_tol = 1e-12,
                std::optional<double> L_override = std::nullopt,
                double trunc_tol = 1e-15, double min_im_tau = 0.05);

  const Groupoid& groupoid() const { return *g_; }
  std::shared_ptr<const Groupoid> groupoid_ptr() const { return g_; }
  const ModelType& model() const { return g_->model(); }
  const ThetaContext& theta() const { return th_; }
  SqrtMode mode() const { return mode_; }
  double zero_tol() const { return zero_tol_; }
  double lambda() const { return g_->model().lambda(); }
  double period() const { return th_.L(); }

  // bracket [x]; real arguments are cached (they lie in (1/2)Z)
  cplx bracket(cplx x) const;
  cplx bracket_at(double x) const;
  // d[x]/dx, used for the boundary-weight limits of the face weights
  cplx bracket_prime(cplx x) const;
  // bracket that may legitimately vanish is fine; these two guard
  // denominators: weight-dependent ones raise DegenerateWeight, spectral
  // ones raise PoleAtU
  cplx denom_weight(double x) const;
  cplx denom_spectral(cplx x) const;

  // signed coordinate a_s of a weight, as a real number
  double coord(const Weight& a, int s) const;

  // G-factor of a weight (product formula, cached)
  cplx G(const Weight& a) const;
  // G_{a,s} = G_{a+eps_s}/G_a, closed form
  cplx G_ratio(const Weight& a, int s) const;
  // the same ratio evaluated as a literal quotient of G's (oracle route)
  cplx G_ratio_quotient(const Weight& a, int s) const;

  // face weight of a closed cell at spectral parameter u; the corner may
  // be any lattice weight (restriction is not assumed here)
  cplx face_weight(const Cell& c, cplx u) const;

  // cap/cup coefficient sqrt(sigma * G_{a+eps_s}/G_a) for the arrow (a,s),
  // where sigma is the family sign
  cplx edge_coeff(const Weight& a, int s) const;
  // A-type variant without the sign (sigma = +1 there anyway)
  cplx edge_coeff_unsigned(const Weight& a, int s) const;

  // crossing multipliers
  cplx rho(cplx u) const;
  cplx rho2(cplx u) const;
  // square-root factorization of rho: types C/D with odd reduced
  // denominator of -lambda/L; throws NotApplicable otherwise
  cplx rho_prime(cplx u) const;
  // reduced fraction -lambda/L = p/q
  std::pair<long, long> rho_prime_fraction() const;

  // square root under the configured policy
  cplx sqrt_policy(cplx radicand) const;

private:
  std::shared_ptr<const Groupoid> g_;
  SqrtMode mode_;
  double zero_tol_;
  ThetaContext th_;
  bool cache_ok_; // real-argument caching active (tau purely imaginary)
  mutable std::map<long long, double> rb_cache_;
  mutable std::map<Weight, cplx> g_cache_;
};

} // namespace rsosq
