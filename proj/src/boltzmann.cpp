#include "rsosq/boltzmann.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace rsosq {

SqrtMode sqrt_mode_from_string(const std::string& s) {
  if (s == "strict-real" || s == "strict_real") return SqrtMode::strict_real;
  if (s == "principal-complex" || s == "principal_complex")
    return SqrtMode::principal_complex;
  throw std::invalid_argument("unknown sqrt mode '" + s +
                              "' (expected strict-real|principal-complex)");
}

std::string sqrt_mode_to_string(SqrtMode m) {
  return m == SqrtMode::strict_real ? "strict-real" : "principal-complex";
}

WeightContext::WeightContext(std::shared_ptr<const Groupoid> g, cplx tau,
                             SqrtMode mode, double zero_tol,
                             std::optional<double> L_override,
                             double trunc_tol, double min_im_tau)
    : g_(std::move(g)),
      mode_(mode),
      zero_tol_(zero_tol),
      th_(tau, L_override ? *L_override : g_->model().L(), trunc_tol,
          min_im_tau) {
  if (!(zero_tol_ > 0.0))
    throw std::invalid_argument("WeightContext: zero_tol must be positive");
  cache_ok_ = th_.tau_imaginary();
  if (mode_ == SqrtMode::strict_real && !cache_ok_)
    throw std::invalid_argument(
        "strict_real square-root mode requires purely imaginary tau");
}

cplx WeightContext::bracket(cplx x) const {
  if (x.imag() == 0.0) return bracket_at(x.real());
  return th_.bracket(x);
}

cplx WeightContext::bracket_at(double x) const {
  if (!cache_ok_) return th_.bracket(cplx(x, 0.0));
  // Real arguments of weight-dependent brackets lie in (1/2)Z.
  const double two_x = 2.0 * x;
  const long long key = std::llround(two_x);
  if (std::abs(two_x - static_cast<double>(key)) < 1e-9) {
    auto it = rb_cache_.find(key);
    if (it != rb_cache_.end()) return it->second;
    const double v = th_.bracket_real(static_cast<double>(key) / 2.0);
    rb_cache_[key] = v;
    return v;
  }
  return th_.bracket_real(x);
}

cplx WeightContext::bracket_prime(cplx x) const {
  return th_.theta_prime(x / th_.L()) / th_.theta_prime0();
}

cplx WeightContext::denom_weight(double x) const {
  const cplx v = bracket_at(x);
  if (std::abs(v) < zero_tol_)
    throw DegenerateWeight("bracket [" + std::to_string(x) +
                           "] vanishes at this dynamical weight");
  return v;
}

cplx WeightContext::denom_spectral(cplx x) const {
  const cplx v = bracket(x);
  if (std::abs(v) < zero_tol_)
    throw PoleAtU("spectral parameter sits on a pole: bracket(" +
                  std::to_string(x.real()) + "+" + std::to_string(x.imag()) +
                  "i) ~ 0");
  return v;
}

double WeightContext::coord(const Weight& a, int s) const {
  return static_cast<double>(g_->coord_signed(a, s)) /
         g_->model().coord_denom();
}

cplx WeightContext::sqrt_policy(cplx radicand) const {
  if (mode_ == SqrtMode::principal_complex) return std::sqrt(radicand);
  const double scale = std::max(1.0, std::abs(radicand));
  if (std::abs(radicand.imag()) > zero_tol_ * scale)
    throw NegativeRadicand("radicand has a nonreal value " +
                           std::to_string(radicand.real()) + "+" +
                           std::to_string(radicand.imag()) + "i");
  const double r = radicand.real();
  if (r < -zero_tol_ * scale)
    throw NegativeRadicand("radicand is negative: " + std::to_string(r));
  // Radicands inside the tolerance are exact zeros of the state-set
  // geometry (a bracket factor sits on a wall); snap them so that boundary
  // terms vanish exactly instead of leaking a sqrt(eps)-sized residue.
  return r <= zero_tol_ ? 0.0 : std::sqrt(r);
}

cplx WeightContext::G(const Weight& a) const {
  auto it = g_cache_.find(a);
  if (it != g_cache_.end()) return it->second;
  const ModelType& mt = g_->model();
  const int n = mt.n;
  cplx out = 1.0;
  // sign factor eps(a): (-1)^{sum a_i} for C, 1 otherwise
  if (mt.family == Family::C) {
    const int s = std::accumulate(a.c.begin(), a.c.end(), 0);
    if (((s % 2) + 2) % 2 == 1) out = -1.0;
  }
  if (mt.family != Family::A) {
    for (int i = 1; i <= n; ++i) {
      const double ai = coord(a, i);
      if (mt.family == Family::B) out *= bracket_at(ai);
      if (mt.family == Family::C) out *= bracket_at(2.0 * ai);
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const double ai = coord(a, i), aj = coord(a, j);
      out *= bracket_at(ai - aj);
      if (mt.family != Family::A) out *= bracket_at(ai + aj);
    }
  g_cache_[a] = out;
  return out;
}

cplx WeightContext::G_ratio(const Weight& a, int s) const {
  if (s == 0) return 1.0;
  const ModelType& mt = g_->model();
  const double as = coord(a, s);
  cplx out = static_cast<double>(mt.sign_sigma());
  // h(a_s + 1)/h(a_s)
  if (mt.family == Family::B)
    out *= bracket_at(as + 1.0) / denom_weight(as);
  else if (mt.family == Family::C)
    out *= bracket_at(2.0 * as + 2.0) / denom_weight(2.0 * as);
  // product over the other letters
  if (mt.family == Family::A) {
    // only the letters move here, so for an inverse step the companion
    // coordinates enter with the opposite sign as well
    for (int j = 1; j <= mt.n; ++j) {
      if (j == std::abs(s)) continue;
      const double aj = coord(a, s > 0 ? j : -j);
      out *= bracket_at(as - aj + 1.0) / denom_weight(as - aj);
    }
  } else {
    for (int j = -mt.n; j <= mt.n; ++j) {
      if (j == 0 || std::abs(j) == std::abs(s)) continue;
      const double aj = coord(a, j);
      out *= bracket_at(as - aj + 1.0) / denom_weight(as - aj);
    }
  }
  return out;
}

cplx WeightContext::G_ratio_quotient(const Weight& a, int s) const {
  const Weight b = g_->apply_step(a, s);
  const cplx ga = G(a);
  if (std::abs(ga) < zero_tol_)
    throw DegenerateWeight("G vanishes at " + a.to_string(g_->model()));
  return G(b) / ga;
}

cplx WeightContext::edge_coeff(const Weight& a, int s) const {
  return sqrt_policy(static_cast<double>(g_->model().sign_sigma()) *
                     G_ratio(a, s));
}

cplx WeightContext::edge_coeff_unsigned(const Weight& a, int s) const {
  return sqrt_policy(G_ratio(a, s));
}

cplx WeightContext::face_weight(const Cell& c, cplx u) const {
  const ModelType& mt = g_->model();
  const int al = c.left, be = c.bottom, ga = c.top, de = c.right;

  // the face must close
  {
    Weight p = g_->apply_step(g_->apply_step(c.corner, al), be);
    Weight q = g_->apply_step(g_->apply_step(c.corner, ga), de);
    if (!(p == q)) return 0.0;
  }
  // the linear family carries only the positive letters; every other
  // configuration has weight zero
  if (mt.family == Family::A && (al < 1 || be < 1 || ga < 1 || de < 1))
    return 0.0;

  const double lam = lambda();
  const cplx br1 = bracket_at(1.0);
  const cplx d1u = denom_spectral(1.0 + u);

  // all four steps zero: the B-type scattering term
  if (al == 0 && be == 0 && ga == 0 && de == 0) {
    if (mt.family != Family::B)
      throw std::invalid_argument("zero steps only occur for family B");
    const cplx dlu = denom_spectral(lam - u);
    const cplx d2l = denom_weight(2.0 * lam);
    // Each scattering channel j carries the neighbour ratio G_{a,j}; the
    // inversion relation pins this factor down (without it the double
    // zero-loop at a weight whose every neighbour leaves the state set
    // would fail to square to the identity).
    cplx sum = 0.0;
    for (int j = -mt.n; j <= mt.n; ++j) {
      if (j == 0) continue;
      const double aj = coord(c.corner, j);
      sum += bracket_at(aj + 0.5 + 2.0 * lam) / denom_weight(aj + 0.5) *
             G_ratio(c.corner, j);
    }
    return bracket(lam + u) * br1 * bracket(2.0 * lam - u) / (dlu * d1u * d2l) -
           bracket(u) * br1 / (d1u * d2l) * sum;
  }

  if (ga == al && be == de) {
    if (be == al) return 1.0; // equal nonzero steps
    if (be == -al) {
      // reflecting term on the diagonal pair (i, -i)
      const int i = al;
      const double ai = coord(c.corner, i);
      const double x = 2.0 * ai + 1.0;
      const cplx dlu = denom_spectral(lam - u);
      // At boundary weights x lands on a zero of the bracket and both
      // terms develop a pole.  The pole is removable: the G-ratio equals
      // one there, so the combined numerator vanishes as well, and the
      // finite boundary weight is the limit, evaluated below with the
      // derivative of the bracket.
      const double k = std::round(x / period());
      if (std::abs(x - k * period()) < 1e-9) {
        const cplx gstar = G_ratio(c.corner, i);
        if (std::abs(gstar - 1.0) > 1e-6)
          throw DegenerateWeight(
              "non-removable pole in a reflecting face weight at " +
              c.corner.to_string(mt));
        // logarithmic derivative of the G-ratio in the coordinate a_i
        auto lb = [&](double y) { return bracket_prime(y) / denom_weight(y); };
        cplx gp = 0.0;
        for (int j = -mt.n; j <= mt.n; ++j) {
          if (j == 0 || std::abs(j) == std::abs(i)) continue;
          const double aj = coord(c.corner, j);
          gp += lb(ai - aj + 1.0) - lb(ai - aj);
        }
        if (mt.family == Family::B) gp += lb(ai + 1.0) - lb(ai);
        if (mt.family == Family::C)
          gp += 2.0 * (lb(2.0 * ai + 2.0) - lb(2.0 * ai));
        return br1 *
               (2.0 * dlu * bracket_prime(-u) +
                2.0 * bracket(u) * bracket_prime(lam - u) +
                bracket(u) * dlu * gp) /
               (2.0 * dlu * d1u);
      }
      const cplx d2a = denom_weight(x);
      return br1 * bracket(x - u) / (d1u * d2a) +
             br1 * bracket(u) * bracket(x + lam - u) / (dlu * d1u * d2a) *
                 G_ratio(c.corner, i);
    }
    // height-preserving term, distinct letters
    const double ai = coord(c.corner, al), aj = coord(c.corner, be);
    return br1 * bracket(ai - aj - u) / (d1u * denom_weight(ai - aj));
  }

  if (ga == be && de == al && al != be && al != -be) {
    // exchange term.  When the two letters have opposite signs the entry
    // carries the product of their intrinsic signs, which is the family
    // sign; for the orthogonal and linear families this is +1, and in the
    // vertex-model limit it reproduces the letter-pair signs of the
    // symplectic R-matrix.  Off the restricted state set this sign is what
    // keeps the summed face identities exact; on the small restricted sets
    // such cells never occur with all four corners admissible.
    const double ai = coord(c.corner, al), aj = coord(c.corner, ga);
    const cplx dij = denom_weight(ai - aj);
    const cplx rad =
        bracket_at(ai - aj + 1.0) * bracket_at(ai - aj - 1.0) / (dij * dij);
    const double pair = (static_cast<long>(al) * ga < 0) ? mt.sign_sigma()
                                                         : 1.0;
    return pair * bracket(u) / d1u * sqrt_policy(rad);
  }

  if (be == -al && de == -ga && ga != al) {
    // pair creation/annihilation term.  The root of the product of the two
    // neighbour ratios is taken with a consistent branch per factor: for
    // the symplectic family each ratio is negative, each factor
    // contributes an imaginary unit, and their product is the family sign
    // times the positive root.  For the other families both ratios are
    // positive and the sign is +1.
    const int i = al, j = ga;
    const double ai = coord(c.corner, i), aj = coord(c.corner, j);
    const cplx dlu = denom_spectral(lam - u);
    const cplx dij = denom_weight(ai + aj + 1.0);
    const cplx rad = G_ratio(c.corner, i) * G_ratio(c.corner, j);
    return static_cast<double>(mt.sign_sigma()) * bracket(u) * br1 *
           bracket(ai + aj + 1.0 + lam - u) / (dlu * d1u * dij) *
           sqrt_policy(rad);
  }

  return 0.0;
}

cplx WeightContext::rho(cplx u) const {
  return bracket(u - 1.0) * bracket(lambda() + u) /
         (denom_spectral(u) * denom_spectral(1.0 + lambda() + u));
}

cplx WeightContext::rho2(cplx u) const {
  const double lam = lambda();
  return bracket(lam + u) * bracket(lam - u) /
         (denom_spectral(1.0 + lam + u) * denom_spectral(1.0 + lam - u));
}

std::pair<long, long> WeightContext::rho_prime_fraction() const {
  const ModelType& mt = g_->model();
  // -lambda / L = (-2 lambda) / (2 L), reduced
  long num = -static_cast<long>(mt.two_lambda());
  long den = 2L * mt.L();
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

cplx WeightContext::rho_prime(cplx u) const {
  const ModelType& mt = g_->model();
  if (mt.family != Family::C && mt.family != Family::D)
    throw NotApplicable(
        "square-root factorization of the crossing multiplier is defined "
        "for families C and D only");
  const auto [p, q] = rho_prime_fraction();
  if (q % 2 == 0)
    throw NotApplicable("factorization requires an odd reduced denominator; "
                        "-lambda/L = " +
                        std::to_string(p) + "/" + std::to_string(q));
  const double lam = lambda();
  cplx out = 1.0;
  for (long i = 0; i <= (q - 1) / 2; ++i) {
    const cplx num = bracket(u + 2.0 * i * lam - 1.0) *
                     bracket(u + (2.0 * i + 1.0) * lam);
    const cplx den = denom_spectral(u + 2.0 * i * lam) *
                     denom_spectral(u + (2.0 * i + 1.0) * lam + 1.0);
    out *= std::sqrt(num / den);
  }
  for (long j = 0; j + 1 <= (q - 1) / 2; ++j) {
    const cplx num = bracket(u + (2.0 * j + 1.0) * lam) *
                     bracket(u + 2.0 * (j + 1.0) * lam + 1.0);
    const cplx den = denom_spectral(u + (2.0 * j + 1.0) * lam - 1.0) *
                     denom_spectral(u + 2.0 * (j + 1.0) * lam);
    out *= std::sqrt(num / den);
  }
  return out;
}

} // namespace rsosq
