#pragma once

#include <cstdint>
#include <vector>

namespace entropic::detail {

// Is `target` >= 0 implied by the rows? `rows[i]` is an inequality (>= 0) unless
// `equality[i]`. A floating-point simplex proposes a support; the answer is true
// only if that support yields exact nonnegative rational multipliers
// reproducing `target`. A false answer may be a miss, never a wrong removal.
bool certified_implied(const std::vector<std::int64_t>& target,
                       const std::vector<const std::vector<std::int64_t>*>& rows,
                       const std::vector<char>& equality);

}  // namespace entropic::detail
