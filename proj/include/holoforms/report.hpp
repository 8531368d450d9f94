#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holoforms {

enum class Status { ExactPass, Fail, SampledPass, NumericPass };

/// Ordered (key, text) pairs; key order is preserved in serialization.
using Fields = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one check. A failed check always carries a counterexample; a
/// numeric pass always carries its tolerance.
struct VerificationReport {
  std::string suite;
  std::string id;
  std::string anchor;
  int trials = 0;
  std::uint64_t seed = 0;
  Status status = Status::ExactPass;
  std::optional<double> tolerance;
  std::optional<Fields> counterexample;
  /// Extra measured values (eigenvalues, margins, constants).
  Fields details;
  double elapsed_ms = 0;

  bool passed() const { return status != Status::Fail; }
};

std::string status_name(Status s);

/// One JSON object on a single line, snake_case keys.
std::string to_json_line(const VerificationReport& r);

}  // namespace holoforms
