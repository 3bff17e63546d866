#ifndef GROUPORDER_MAGNUS_HPP
#define GROUPORDER_MAGNUS_HPP

#include <optional>
#include <vector>

#include "grouporder/series.hpp"
#include "grouporder/words.hpp"

namespace grouporder {

enum class Sign { Negative = -1, Zero = 0, Positive = +1 };
enum class Ordering { Less = -1, Equal = 0, Greater = +1 };

const char* to_string(Sign s);
const char* to_string(Ordering o);

// Bi-ordering of the free group through the Magnus embedding: the sign of a
// nonempty reduced word is the sign of the coefficient at the deglex-least
// nonconstant monomial of its expansion. The truncation degree starts at
// max(1, |w|) and doubles (up to 4|w|+8, or `max_cap_override`) until a
// nonzero coefficient appears; coefficients below the cap are exact, so the
// first hit is final. Results are memoized.
Sign magnus_sign(const Word& w);
Sign magnus_sign(const Word& w, std::optional<int> max_cap_override);

// Process-wide override for the adaptive ceiling (CLI --truncation-cap).
void set_truncation_cap_override(std::optional<int> cap);
std::optional<int> truncation_cap_override();

// u < v iff sign(u^-1 v) = Positive.
Ordering magnus_compare(const Word& u, const Word& v);

// ball(rank, radius) filtered to positive words, in shortlex order.
std::vector<Word> positive_ball(int rank, int radius, int radius_cap = kDefaultRadiusCap);

} // namespace grouporder

#endif // GROUPORDER_MAGNUS_HPP
