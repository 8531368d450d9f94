#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holoforms/report.hpp"

namespace holoforms {

enum class Fault { None, CorruptPhi0, BrokenCone };

struct SuiteOptions {
  /// Trials per identity, per degree (verbitsky) or per structure (potentials).
  int trials = 25;
  std::uint64_t seed = 0;
  Fault fault = Fault::None;
};

/// identities, verbitsky, potentials, cone, hardy.
const std::vector<std::string>& suite_names();

/// Reports in a fixed order that does not depend on the thread count.
/// "all" runs every suite in suite_names() order. Throws
/// std::invalid_argument for an unknown suite.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace holoforms
