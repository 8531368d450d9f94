#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holoforms/report.hpp"
#include "holoforms/structures.hpp"

namespace holoforms {

/// Catalog entry: a pointwise identity for a model parallel form, stated in
/// terms of random polynomial inputs of the listed shape.
struct IdentityInfo {
  std::string id;
  std::string structure;  // "g2" or "spin7"
  std::string inputs;     // e.g. "1-form a", "0-forms a, b"
  std::string anchor;     // the identity as a formula
};

/// Closed enumeration, in a fixed order.
const std::vector<IdentityInfo>& identity_catalog();

/// Runs one identity over `trials` seeded inputs; exact-pass iff every
/// residual vanishes. `fixture` replaces the model form of the matching kind
/// (fault injection). Throws std::invalid_argument listing the catalog for
/// an unknown id.
VerificationReport verify_identity(const std::string& id, int trials, std::uint64_t seed,
                                   const std::optional<StructureDescriptor>& fixture = std::nullopt);

/// φ₀ with its dx^{356} term moved to dx^{456}. Still closed, coclosed and
/// of squared norm 7, but not a G₂ form for the flat metric.
StructureDescriptor corrupted_g2_fixture();

}  // namespace holoforms
