#include "rsosq/rmatrix.hpp"

#include <cmath>

namespace rsosq {

std::string rkind_to_string(RKind k) {
  switch (k) {
    case RKind::VV: return "VV";
    case RKind::VstarV: return "VstarV";
    case RKind::VVstar: return "VVstar";
    case RKind::VstarVstar: return "VstarVstar";
  }
  throw std::invalid_argument("invalid RKind");
}

RKind rkind_from_string(const std::string& s) {
  if (s == "VV") return RKind::VV;
  if (s == "VstarV") return RKind::VstarV;
  if (s == "VVstar") return RKind::VVstar;
  if (s == "VstarVstar") return RKind::VstarVstar;
  throw std::invalid_argument("unknown R-matrix kind '" + s + "'");
}

RMatrixHandle::RMatrixHandle(std::shared_ptr<const WeightContext> ctx,
                             RKind kind, double pole_guard_scale)
    : ctx_(std::move(ctx)), kind_(kind), pole_guard_scale_(pole_guard_scale) {
  if (kind_ != RKind::VV && ctx_->model().family != Family::A)
    throw NotApplicable("rotated R-matrices exist for family A only");
}

Signature RMatrixHandle::in_kinds() const {
  switch (kind_) {
    case RKind::VV: return {LegKind::V, LegKind::V};
    case RKind::VstarV: return {LegKind::Vstar, LegKind::V};
    case RKind::VVstar: return {LegKind::V, LegKind::Vstar};
    case RKind::VstarVstar: return {LegKind::Vstar, LegKind::Vstar};
  }
  throw std::invalid_argument("invalid RKind");
}

Signature RMatrixHandle::out_kinds() const {
  switch (kind_) {
    case RKind::VV: return {LegKind::V, LegKind::V};
    case RKind::VstarV: return {LegKind::V, LegKind::Vstar};
    case RKind::VVstar: return {LegKind::Vstar, LegKind::V};
    case RKind::VstarVstar: return {LegKind::Vstar, LegKind::Vstar};
  }
  throw std::invalid_argument("invalid RKind");
}

double RMatrixHandle::pole_guard() const {
  return pole_guard_scale_ * ctx_->period();
}

namespace {

// Adds the entry unless it is an exact structural zero.
void add_entry(GradedOp& op, const Path& in, const Path& out, cplx v) {
  if (std::abs(v) == 0.0) return;
  op.add(in, out, v);
}

} // namespace

GradedOp RMatrixHandle::at(cplx u) const {
  const Groupoid& G = ctx_->groupoid();
  const ModelType& mt = ctx_->model();
  GradedOp op(ctx_->groupoid_ptr(), in_kinds(), out_kinds());

  if (kind_ == RKind::VV) {
    for (const Cell& c : G.cells())
      add_entry(op, {G.object_id(c.corner), c.left, c.bottom},
                {G.object_id(c.corner), c.top, c.right},
                ctx_->face_weight(c, u));
    return op;
  }

  const double lam = ctx_->lambda();
  const int n = mt.n;
  const Signature sin = in_kinds(), sout = out_kinds();

  for (const Path& in : enumerate_paths(G, sin)) {
    const int a_id = in[0];
    const Weight& a = G.object(a_id);
    const int tgt = path_target(G, in, sin);
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        Path out;
        if (kind_ == RKind::VstarV)
          out = {a_id, k, -l};
        else if (kind_ == RKind::VVstar)
          out = {a_id, -k, l};
        else
          out = {a_id, -k, -l};
        // out-path must be admissible with the same target
        try {
          if (path_target(G, out, sout) != tgt) continue;
        } catch (const Error&) {
          continue;
        }

        if (kind_ == RKind::VstarV) {
          // in = (-i, j), out = (k, -l); the underlying face sits at the
          // corner a - eps_i with (left, bottom, top, right) = (j, l, i, k)
          // and argument lambda - u, carrying the G-ratio square root.
          const int i = -in[1], j = in[2];
          const Weight d = G.apply_step(a, -i);
          const cplx rad = ctx_->G(G.apply_step(a, k)) * ctx_->G(d) /
                           (ctx_->G(a) * ctx_->G(G.object(tgt)));
          const Cell face{d, j, l, i, k};
          add_entry(op, in, out,
                    ctx_->sqrt_policy(rad) *
                        ctx_->face_weight(face, lam - u));
        } else if (kind_ == RKind::VVstar) {
          // in = (i, -j), out = (-k, l); face at corner a - eps_k with
          // (left, bottom, top, right) = (k, i, l, j), argument lambda - u.
          const int i = in[1];
          const Weight b = G.apply_step(a, -k);
          const cplx rad = ctx_->G(b) * ctx_->G(G.apply_step(a, i)) /
                           (ctx_->G(a) * ctx_->G(G.object(tgt)));
          const Cell face{b, k, i, l, -in[2]};
          add_entry(op, in, out,
                    ctx_->sqrt_policy(rad) *
                        ctx_->face_weight(face, lam - u));
        } else {
          // in = (-i, -j), out = (-k, -l); face at corner a-eps_i-eps_j
          // with (left, bottom, top, right) = (l, k, j, i), argument u.
          const Cell face{G.object(tgt), l, k, -in[2], -in[1]};
          add_entry(op, in, out, ctx_->face_weight(face, u));
        }
      }
    }
  }
  return op;
}

GradedOp cap_vv(const WeightContext& ctx) {
  const Groupoid& G = ctx.groupoid();
  GradedOp op(ctx.groupoid_ptr(), {LegKind::V, LegKind::V}, {});
  for (const Arrow& f : G.carrier_arrows()) {
    const int a_id = G.object_id(f.source);
    const Path in = {a_id, f.step, -f.step};
    try {
      path_target(G, in, {LegKind::V, LegKind::V});
    } catch (const Error&) {
      continue;
    }
    op.add(in, {a_id}, ctx.edge_coeff(f.source, f.step));
  }
  return op;
}

GradedOp cup_vv(const WeightContext& ctx) {
  const Groupoid& G = ctx.groupoid();
  GradedOp op(ctx.groupoid_ptr(), {}, {LegKind::V, LegKind::V});
  for (const Arrow& f : G.carrier_arrows()) {
    const int a_id = G.object_id(f.source);
    const Path out = {a_id, f.step, -f.step};
    try {
      path_target(G, out, {LegKind::V, LegKind::V});
    } catch (const Error&) {
      continue;
    }
    op.add({a_id}, out, ctx.edge_coeff(f.source, f.step));
  }
  return op;
}

namespace {

// Shared builder for the four A-type caps/cups: paths (a, s, -s) with the
// first leg of the given kind, coefficient sqrt(G_{a+eps_s}/G_a).
GradedOp a_type_pairing(const WeightContext& ctx, LegKind first, bool cap) {
  const Groupoid& G = ctx.groupoid();
  if (ctx.model().family != Family::A)
    throw NotApplicable("this pairing map exists for family A only");
  const Signature pair_sig = {first,
                              first == LegKind::V ? LegKind::Vstar
                                                  : LegKind::V};
  GradedOp op(ctx.groupoid_ptr(), cap ? pair_sig : Signature{},
              cap ? Signature{} : pair_sig);
  const int n = ctx.model().n;
  for (int id = 0; id < G.object_count(); ++id) {
    const Weight& a = G.object(id);
    for (int s0 = 1; s0 <= n; ++s0) {
      const int s = (first == LegKind::V) ? s0 : -s0;
      const Path pair = {id, s, -s};
      try {
        path_target(G, pair, pair_sig);
      } catch (const Error&) {
        continue;
      }
      const cplx v = ctx.edge_coeff_unsigned(a, s);
      if (cap)
        op.add(pair, {id}, v);
      else
        op.add({id}, pair, v);
    }
  }
  return op;
}

} // namespace

GradedOp cap_v_vstar(const WeightContext& ctx) {
  return a_type_pairing(ctx, LegKind::V, true);
}
GradedOp cup_vstar_v(const WeightContext& ctx) {
  return a_type_pairing(ctx, LegKind::Vstar, false);
}
GradedOp cap_vstar_v(const WeightContext& ctx) {
  return a_type_pairing(ctx, LegKind::Vstar, true);
}
GradedOp cup_v_vstar(const WeightContext& ctx) {
  return a_type_pairing(ctx, LegKind::V, false);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool near_any_pole(cplx u, const WeightContext& ctx, double dist) {
  const double lam = ctx.lambda();
  const double L = ctx.period();
  const cplx tau = ctx.theta().tau();
  static const double offs[] = {0.0, 1.0, -1.0};
  const double bases[] = {0.0, lam, -lam, 2.0 * lam, -2.0 * lam};
  for (double b : bases)
    for (double o : offs) {
      const cplx w = u - cplx(b + o, 0.0);
      // nearest lattice translate of w in Z L + Z L tau
      const double beta = w.imag() / (L * tau.imag());
      const double alpha = (w.real() - beta * L * tau.real()) / L;
      for (int da = -1; da <= 1; ++da)
        for (int db = -1; db <= 1; ++db) {
          const double ka = std::round(alpha) + da;
          const double kb = std::round(beta) + db;
          const cplx latt = ka * L + kb * L * tau;
          if (std::abs(w - latt) < dist) return true;
        }
    }
  return false;
}

cplx sample_spectral(std::mt19937_64& rng, const WeightContext& ctx,
                     double guard, const std::vector<cplx>& offsets) {
  const double L = ctx.period();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double re = L * (0.1 + 0.8 * uniform01(rng));
    const double im = -0.4 + 0.8 * uniform01(rng);
    const cplx u(re, im);
    bool ok = !near_any_pole(u, ctx, guard);
    for (const cplx& o : offsets)
      if (ok && near_any_pole(u + o, ctx, guard)) ok = false;
    if (ok) return u;
  }
  throw Error("sample_spectral: could not find a pole-free sample");
}

} // namespace rsosq
