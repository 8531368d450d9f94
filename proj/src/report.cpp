#include "holoforms/report.hpp"

#include <json.hpp>

namespace holoforms {

std::string status_name(Status s) {
  switch (s) {
    case Status::ExactPass: return "exact-pass";
    case Status::Fail: return "fail";
    case Status::SampledPass: return "sampled-pass";
    case Status::NumericPass: return "numeric-pass";
  }
  return "fail";
}

std::string to_json_line(const VerificationReport& r) {
  auto fields = [](const Fields& f) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f) o[k] = v;
    return o;
  };
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["status"] = status_name(r.status);
  j["tolerance"] = r.tolerance ? nlohmann::ordered_json(*r.tolerance) : nullptr;
  j["counterexample"] = r.counterexample ? fields(*r.counterexample) : nullptr;
  j["details"] = fields(r.details);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

}  // namespace holoforms
