// Materialized R-matrix operators, caps/cups and guarded sampling of the
// spectral parameter.
#pragma once

#include <memory>
#include <random>

#include "rsosq/boltzmann.hpp"
#include "rsosq/graded.hpp"

namespace rsosq {

// Which tensor square the operator acts on.  VV exists for every family;
// the other three are the rotations and exist for family A only.
enum class RKind { VV, VstarV, VVstar, VstarVstar };

std::string rkind_to_string(RKind k);
RKind rkind_from_string(const std::string& s);

class RMatrixHandle {
public:
  explicit RMatrixHandle(std::shared_ptr<const WeightContext> ctx,
                         RKind kind = RKind::VV,
                         double pole_guard_scale = 1e-3);

  const WeightContext& ctx() const { return *ctx_; }
  std::shared_ptr<const WeightContext> ctx_ptr() const { return ctx_; }
  RKind kind() const { return kind_; }
  Signature in_kinds() const;
  Signature out_kinds() const;

  // Materializes the operator at spectral parameter u.
  GradedOp at(cplx u) const;

  // absolute pole-guard distance: pole_guard_scale * L
  double pole_guard() const;

private:
  std::shared_ptr<const WeightContext> ctx_;
  RKind kind_;
  double pole_guard_scale_;
};

// Caps and cups.  For B/C/D the pairing lives on V (x) V; for A there are
// four maps between V, V* and the unit:
//   cap_vv       : V (x) V  -> 1   (families B, C, D)
//   cup_vv       : 1 -> V (x) V    (families B, C, D)
//   cap_v_vstar  : V (x) V* -> 1   (family A)
//   cup_vstar_v  : 1 -> V* (x) V   (family A)
//   cap_vstar_v  : V* (x) V -> 1   (family A)
//   cup_v_vstar  : 1 -> V (x) V*   (family A)
GradedOp cap_vv(const WeightContext& ctx);
GradedOp cup_vv(const WeightContext& ctx);
GradedOp cap_v_vstar(const WeightContext& ctx);
GradedOp cup_vstar_v(const WeightContext& ctx);
GradedOp cap_vstar_v(const WeightContext& ctx);
GradedOp cup_v_vstar(const WeightContext& ctx);

// Deterministic uniform double in [0,1) from a seeded engine.
double uniform01(std::mt19937_64& rng);

// True if u lies within dist of b + Z L + Z L tau for some base pole b of
// the coefficient functions (the union over all operator kinds and
// crossing multipliers is used).
bool near_any_pole(cplx u, const WeightContext& ctx, double dist);

// Samples u uniformly from the rectangle Re u in [0.1, 0.9] L,
// Im u in [-0.4, 0.4], rejecting points within `guard` of a pole translate
// (also when shifted by the offsets the caller plans to add).
cplx sample_spectral(std::mt19937_64& rng, const WeightContext& ctx,
                     double guard, const std::vector<cplx>& offsets = {});

} // namespace rsosq
