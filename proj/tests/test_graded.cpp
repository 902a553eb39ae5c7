// Path enumeration and the graded operator algebra, checked against a
// dense matrix realisation on a model small enough to enumerate by hand.
#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "doctest.h"
#include "rsosq/errors.hpp"
#include "rsosq/graded.hpp"
#include "rsosq/groupoid.hpp"

using namespace rsosq;
using cplx = std::complex<double>;

namespace {

std::shared_ptr<const Groupoid> a1() {
  return std::make_shared<Groupoid>(ModelType{Family::A, 2, 1});
}

// Dense realisation of a graded operator on explicit path bases.
using Dense = std::vector<std::vector<cplx>>;

Dense dense(const GradedOp& op, const std::vector<Path>& in,
            const std::vector<Path>& out) {
  Dense m(out.size(), std::vector<cplx>(in.size(), 0.0));
  for (size_t j = 0; j < in.size(); ++j)
    for (size_t i = 0; i < out.size(); ++i) m[i][j] = op.entry(in[j], out[i]);
  return m;
}

Dense matmul(const Dense& a, const Dense& b) {
  Dense m(a.size(), std::vector<cplx>(b[0].size(), 0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

double max_diff(const Dense& a, const Dense& b) {
  double r = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      r = std::max(r, std::abs(a[i][j] - b[i][j]));
  return r;
}

// Fill an operator with distinct nonzero entries so products detect
// misrouted indices.
GradedOp filled(std::shared_ptr<const Groupoid> g, const Signature& in,
                const Signature& out, double seed) {
  GradedOp op(g, in, out);
  double v = seed;
  for (const Path& p : enumerate_paths(*g, in)) {
    const int tgt = path_target(*g, p, in);
    for (const Path& q : enumerate_paths(*g, out)) {
      if (q[0] != p[0] || path_target(*g, q, out) != tgt) continue;
      op.add(p, q, cplx(v, v / 7.0));
      v += 1.0;
    }
  }
  return op;
}

} // namespace

TEST_CASE("path enumeration on the smallest model") {
  auto g = a1();
  // carrier legs: object 0 steps by +1, object 1 by +2
  auto vv = enumerate_paths(*g, {LegKind::V, LegKind::V});
  REQUIRE(vv.size() == 2);
  CHECK(vv[0] == Path{0, 1, 2});
  CHECK(vv[1] == Path{1, 2, 1});
  CHECK(path_target(*g, vv[0], {LegKind::V, LegKind::V}) == 0);
  CHECK(path_target(*g, vv[1], {LegKind::V, LegKind::V}) == 1);

  // dual legs walk the negative steps
  auto sv = enumerate_paths(*g, {LegKind::Vstar});
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == Path{0, -2});
  CHECK(sv[1] == Path{1, -1});

  // arity zero: one anchor path per object
  auto anchors = enumerate_paths(*g, {});
  REQUIRE(anchors.size() == 2);
  CHECK(anchors[0] == Path{0});

  // invalid walks are rejected
  CHECK_THROWS_AS(path_target(*g, Path{0, 2}, {LegKind::V}), Error);
  CHECK_THROWS_AS(path_target(*g, Path{0, 1, 1}, {LegKind::V, LegKind::V}), Error);
}

TEST_CASE("dual legs need an ambient dual space") {
  auto b = std::make_shared<Groupoid>(ModelType{Family::B, 2, 1});
  CHECK_THROWS_AS(enumerate_paths(*b, {LegKind::Vstar}), NotApplicable);
}

TEST_CASE("graded operators reject entries that break the grading") {
  auto g = a1();
  GradedOp op(g, {LegKind::V, LegKind::V}, {LegKind::V, LegKind::V});
  // different sources
  CHECK_THROWS_AS(op.add(Path{0, 1, 2}, Path{1, 2, 1}, 1.0),
                  std::invalid_argument);
  // wrong arity
  CHECK_THROWS_AS(op.add(Path{0, 1}, Path{0, 1, 2}, 1.0),
                  std::invalid_argument);
  // entries never added read as zero
  CHECK(op.entry(Path{0, 1, 2}, Path{0, 1, 2}) == cplx(0.0));
}

TEST_CASE("composition matches dense matrix multiplication") {
  auto g = a1();
  const Signature vv{LegKind::V, LegKind::V};
  const auto basis = enumerate_paths(*g, vv);
  GradedOp f = filled(g, vv, vv, 2.0);
  GradedOp h = filled(g, vv, vv, 11.0);
  GradedOp fh = compose(f, h); // h acts first
  CHECK(max_diff(dense(fh, basis, basis),
                 matmul(dense(f, basis, basis), dense(h, basis, basis))) ==
        doctest::Approx(0.0));

  // identity is a two-sided unit
  GradedOp id = identity_op(g, vv);
  CHECK(residual_max(compose(f, id), f) == doctest::Approx(0.0));
  CHECK(residual_max(compose(id, f), f) == doctest::Approx(0.0));

  // mismatched signatures are rejected
  GradedOp one_leg = filled(g, {LegKind::V}, {LegKind::V}, 3.0);
  CHECK_THROWS_AS(compose(f, one_leg), std::invalid_argument);
}

TEST_CASE("tensor product chains paths through matching endpoints") {
  auto g = a1();
  const Signature v{LegKind::V};
  GradedOp f = filled(g, v, v, 2.0);
  GradedOp h = filled(g, v, v, 5.0);
  GradedOp fh = op_tensor(f, h);
  // entry on the chained path factors into the two single-leg entries
  for (const Path& p : enumerate_paths(*g, {LegKind::V, LegKind::V})) {
    const Path p1{p[0], p[1]};
    const int mid = path_target(*g, p1, v);
    const Path p2{mid, p[2]};
    for (const Path& q : enumerate_paths(*g, {LegKind::V, LegKind::V})) {
      if (q[0] != p[0]) continue;
      const Path q1{q[0], q[1]};
      const Path q2{path_target(*g, q1, v), q[2]};
      CHECK(std::abs(fh.entry(p, q) -
                     f.entry(p1, q1) * h.entry(p2, q2)) < 1e-14);
    }
  }
  // tensoring with an arity-0 operator is a graded scalar
  GradedOp unit = identity_op(g, {});
  CHECK(residual_max(op_tensor(unit, f), f) == doctest::Approx(0.0));
  CHECK(residual_max(op_tensor(f, unit), f) == doctest::Approx(0.0));
}

TEST_CASE("embedding equals tensoring with identities") {
  auto g = a1();
  const Signature v{LegKind::V};
  GradedOp f = filled(g, v, v, 2.0);
  const Signature vvv{LegKind::V, LegKind::V, LegKind::V};
  for (int pos = 1; pos <= 3; ++pos) {
    GradedOp via_embed = embed(f, pos, vvv);
    Signature pre(vvv.begin(), vvv.begin() + (pos - 1));
    Signature suf(vvv.begin() + pos, vvv.end());
    GradedOp via_tensor =
        op_tensor(op_tensor(identity_op(g, pre), f), identity_op(g, suf));
    CHECK(residual_max(via_embed, via_tensor) == doctest::Approx(0.0));
  }
  // embedding can change the leg count when in/out arities differ
  GradedOp cap = filled(g, {LegKind::V, LegKind::Vstar}, {}, 3.0);
  GradedOp e = embed(cap, 1, {LegKind::V, LegKind::Vstar, LegKind::V});
  for (const auto& [p, row] : e.rows()) {
    CHECK(p.size() == 4);
    for (const auto& [q, val] : row) {
      CHECK(q.size() == 2);
      (void)val;
    }
  }
}

TEST_CASE("scaling, axpy and residuals") {
  auto g = a1();
  const Signature v{LegKind::V};
  GradedOp f = filled(g, v, v, 2.0);
  GradedOp f2 = f;
  f2.scale(3.0);
  CHECK(f2.max_abs() == doctest::Approx(3.0 * f.max_abs()));
  CHECK(residual_max(f2, 3.0 * f) == doctest::Approx(0.0));
  f2.axpy(-3.0, f);
  CHECK(f2.max_abs() == doctest::Approx(0.0));
  // the witness names the worst entry
  GradedOp zero(g, v, v);
  const std::string w = residual_witness(f, zero);
  CHECK(w.find("in=") != std::string::npos);
  CHECK(w.find("|diff|=") != std::string::npos);
}
