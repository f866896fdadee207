#ifndef LORENTZ_REARRANGEMENT_HPP
#define LORENTZ_REARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lorentz/sequences.hpp"

namespace lorentz {

/// Default cap on the number of terms any horizon search may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// First n ranks of the stable nonincreasing rearrangement sigma:
/// |a_{sigma_1}| >= |a_{sigma_2}| >= ..., ties broken towards the smaller
/// index. When the sequence has fewer than n nonzero entries the result is
/// padded with value 0 and index nullopt.
struct RearrangementPrefix {
    std::vector<std::optional<std::uint64_t>> indices;
    std::vector<double> values;
};

/// Computes the prefix with a certified horizon: the envelope beyond the
/// horizon is strictly below the n-th largest value found within it, so the
/// prefix is globally correct. Throws HorizonExhausted when the budget (or a
/// Tabled cutoff) cannot separate rank n from the envelope.
RearrangementPrefix rearrangement_prefix(const SequenceSpec& a, std::uint64_t n,
                                         std::uint64_t budget = kDefaultBudget);

/// Rank of index j under the stable rearrangement, or nullopt when a_j = 0
/// (the zero-weight convention applies to such indices).
std::optional<std::uint64_t> sigma_inverse_at(const SequenceSpec& a,
                                              std::uint64_t j,
                                              std::uint64_t budget = kDefaultBudget);

} // namespace lorentz

#endif
