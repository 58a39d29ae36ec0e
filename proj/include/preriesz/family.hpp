#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "preriesz/ecseq.hpp"
#include "preriesz/zseq.hpp"

namespace preriesz {

enum class Direction { decreasing, increasing };

/// Closed-form families whose componentwise limit is known exactly.
enum class FamilyRule {
  ones_from_index,  ///< term n is 1 from index n on (y^{(n)})
  bump_at_index,    ///< term n is concentrated at index n (e^{(n)}, x^{(n)})
};

/// A finite, ordered stretch of a net, optionally tagged with the closed-form
/// rule that generated it. Infinite nets are not representable.
template <class Seq>
struct MonotoneFamily {
  std::vector<Seq> terms;
  Direction direction = Direction::decreasing;
  std::optional<FamilyRule> rule;
};

struct MonotonicityViolation {
  std::size_t first = 0;   ///< 1-based position of the earlier term
  std::size_t second = 0;  ///< first + 1
  std::int64_t component = 0;
};

template <class Seq>
struct FamilyReport {
  bool monotone = false;
  std::optional<MonotonicityViolation> violation;
  Seq final_term;
  /// Exact componentwise limit: the rule's limit when tagged, otherwise the
  /// final term (the limit of the finite net itself).
  Seq componentwise_limit;
};

FamilyReport<EcSeq> family_check(const MonotoneFamily<EcSeq>& f);
FamilyReport<ZSeq> family_check(const MonotoneFamily<ZSeq>& f);

/// y^{(1)}, ..., y^{(n)}
MonotoneFamily<EcSeq> ones_from_family(std::size_t n);
/// e^{(1)}, ..., e^{(n)}
MonotoneFamily<EcSeq> unit_family(std::size_t n, Direction declared);
/// x^{(1)}, ..., x^{(n)} with x^{(k)} = 1 at k and -1 at k+1.
MonotoneFamily<ZSeq> bump_family(std::size_t n, Direction declared);

}  // namespace preriesz
