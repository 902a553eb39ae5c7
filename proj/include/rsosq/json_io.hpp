// JSON serialization of verification reports.  Key order is fixed so that
// two runs with the same configuration and seed produce byte-identical
// output.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rsosq/verify.hpp"

namespace rsosq {

using ordered_json = nlohmann::ordered_json;

inline ordered_json check_to_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["model"] = r.model;
  j["tolerance"] = r.tolerance;
  ordered_json samples = ordered_json::array();
  for (const SamplePoint& s : r.samples) {
    ordered_json js;
    js["args"] = s.args;
    js["residual"] = s.residual;
    samples.push_back(std::move(js));
  }
  j["samples"] = std::move(samples);
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (r.informational) j["informational"] = true;
  return j;
}

inline ordered_json suite_to_json(const ModelType& mt,
                                  const VerifyConfig& cfg,
                                  const std::vector<CheckReport>& checks) {
  ordered_json j;
  j["schema"] = "rsos-qgroup/1";
  j["model"] = mt.name();
  j["tau"] = {cfg.tau.real(), cfg.tau.imag()};
  j["tolerance"] = cfg.tolerance;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["sqrt_mode"] = sqrt_mode_to_string(cfg.sqrt_mode);
  j["unrestricted"] = cfg.unrestricted;
  ordered_json arr = ordered_json::array();
  bool all_pass = true;
  for (const CheckReport& r : checks) {
    all_pass = all_pass && r.pass;
    arr.push_back(check_to_json(r));
  }
  j["checks"] = std::move(arr);
  j["pass"] = all_pass;
  return j;
}

} // namespace rsosq
