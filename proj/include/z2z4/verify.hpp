#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4/additive_code.hpp"
#include "z2z4/symmetry.hpp"

namespace z2z4 {

struct VerifyOptions {
  std::optional<int> r, t;
  Family family = Family::mixed;  // theorem1 only
  SymmetryOptions sym;
  std::uint64_t max_span = kDefaultMaxSpan;
};

/// theorem1, corollary2a, corollary2b, corollary2c, prop1, prop2,
/// prop3-counts, section7.
const std::vector<std::string>& verify_claims();

/// Writes a deterministic report and returns 0 when every check passes, 1 when
/// one fails. Unknown claims throw InvalidArgument; uncertified searches throw
/// BudgetExceeded.
int run_verify(std::string_view claim, const VerifyOptions& opts, std::ostream& out);

}  // namespace z2z4
