// The relation engine: suites pass on the desk models, reports are
// deterministic per seed, family scoping is honest, boundary terms vanish
// identically, and the hexagon relation extends off the restricted window.
#include <string>
#include <vector>

#include "doctest.h"
#include "rsosq/errors.hpp"
#include "rsosq/json_io.hpp"
#include "rsosq/verify.hpp"

using namespace rsosq;

namespace {

VerifyConfig quick_cfg(int samples = 5, std::uint64_t seed = 7) {
  VerifyConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

} // namespace

TEST_CASE("full suites pass on the desk models") {
  const std::vector<ModelType> models = {
      {Family::A, 2, 1}, {Family::A, 3, 1}, {Family::B, 2, 1},
      {Family::C, 2, 1}, {Family::D, 3, 1},
  };
  for (const ModelType& mt : models) {
    Verifier v(mt, quick_cfg());
    const std::vector<CheckReport> reports = v.run_suite();
    const std::vector<std::string> names =
        Verifier::check_names(mt.family, false);
    REQUIRE(reports.size() == names.size());
    for (size_t i = 0; i < reports.size(); ++i) {
      CHECK(reports[i].check == names[i]);
      CHECK_MESSAGE(reports[i].pass, mt.name(), " ", reports[i].check,
                    " max_residual=", reports[i].max_residual, " ",
                    reports[i].witness);
    }
  }
}

TEST_CASE("reports are byte-identical per seed and move with it") {
  const ModelType mt{Family::B, 2, 1};
  const VerifyConfig cfg = quick_cfg(4, 11);
  Verifier v1(mt, cfg);
  Verifier v2(mt, cfg);
  const std::string s1 = suite_to_json(mt, cfg, v1.run_suite()).dump(2);
  const std::string s2 = suite_to_json(mt, cfg, v2.run_suite()).dump(2);
  CHECK(s1 == s2);
  VerifyConfig other = cfg;
  other.seed = 12;
  Verifier v3(mt, other);
  const std::string s3 = suite_to_json(mt, other, v3.run_suite()).dump(2);
  CHECK(s1 != s3);
}

TEST_CASE("family scoping of the checks is honest") {
  Verifier va({Family::A, 2, 1}, quick_cfg(2));
  CHECK_THROWS_AS(va.run("crossing"), NotApplicable);
  CHECK_THROWS_AS(va.run("rotation_invariance"), NotApplicable);
  CHECK_THROWS_AS(va.run("rotational_symmetry"), NotApplicable);
  CHECK_THROWS_AS(va.run("crossing_unitarity_first"), NotApplicable);
  CHECK_THROWS_AS(va.run("crossing_unitarity_second"), NotApplicable);
  CHECK_THROWS_AS(va.run("no_such_check"), std::invalid_argument);

  Verifier vb({Family::B, 2, 1}, quick_cfg(2));
  CHECK_THROWS_AS(vb.run("crossing_dual"), NotApplicable);
  CHECK_THROWS_AS(vb.run("mixed_ybe"), NotApplicable);
  CHECK_THROWS_AS(vb.run("dual_inversion"), NotApplicable);
  CHECK_THROWS_AS(vb.run("rotation_consistency"), NotApplicable);
  CHECK_THROWS_AS(vb.run("shifted_inversion_lower"), NotApplicable);
  CHECK_THROWS_AS(vb.run("shifted_inversion_upper"), NotApplicable);
}

TEST_CASE("boundary terms vanish identically") {
  // on non-closing or wall-crossing terms every factor snaps to an exact
  // zero, so the residual is not merely small
  for (const ModelType& mt : std::vector<ModelType>{
           {Family::A, 2, 1}, {Family::C, 2, 1}, {Family::D, 3, 1}}) {
    Verifier v(mt, quick_cfg(3));
    const CheckReport r = v.boundary_vanishing();
    CHECK(r.pass);
    CHECK(r.max_residual == 0.0);
  }
  // the B-type mirror wall cancels only as a pair, to theta precision
  Verifier vb({Family::B, 2, 1}, quick_cfg(3));
  const CheckReport rb = vb.boundary_vanishing();
  CHECK(rb.pass);
  CHECK(rb.max_residual <= 1e-11);
}

TEST_CASE("the hexagon relation holds off the restricted window") {
  ModelType mt{Family::C, 2, 1};
  VerifyConfig cfg = quick_cfg(3);
  cfg.unrestricted = true;
  Verifier v(mt, cfg);
  const std::vector<std::string> names =
      Verifier::check_names(mt.family, true);
  REQUIRE(!names.empty());
  CHECK(names.back() == "star_triangle_open");
  const CheckReport r = v.star_triangle_open();
  CHECK_MESSAGE(r.pass, "max_residual=", r.max_residual, " ", r.witness);
  CHECK(r.samples.size() == 5);
}

TEST_CASE("principal-branch runs are marked informational") {
  VerifyConfig cfg = quick_cfg(2);
  cfg.sqrt_mode = SqrtMode::principal_complex;
  Verifier v({Family::A, 2, 1}, cfg);
  const CheckReport r = v.ybe();
  CHECK(r.informational);
  CHECK(r.pass);
}

TEST_CASE("an impossible tolerance is reported as a failure with a witness") {
  VerifyConfig cfg = quick_cfg(2);
  cfg.tolerance = 0.0;
  Verifier v({Family::B, 2, 1}, cfg);
  const CheckReport r = v.ybe();
  CHECK(!r.pass);
  CHECK(!r.witness.empty());
}
