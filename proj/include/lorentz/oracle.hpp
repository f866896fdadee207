#ifndef LORENTZ_ORACLE_HPP
#define LORENTZ_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "lorentz/sequences.hpp"
#include "lorentz/weights.hpp"

namespace lorentz {
namespace oracle {

/// Exhaustive-search configuration. The search places the k support values
/// into distinct weight positions from {1, ..., k + slack}; the slack
/// positions keep the oracle logically independent of the greedy argument.
struct PlacementSearchConfig {
    std::uint32_t slack = 2;
    std::uint32_t max_support = 8;
};

/// Maximum of sum |a_{psi_i}|^p * w_i over all injective placements of the
/// support of a Finite sequence. Exact search, no heuristics.
double brute_force_norm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                            PlacementSearchConfig cfg = {});

/// Maximum over all i! permutations of (|a_1|, ..., |a_i|) paired with
/// (w_1, ..., w_i).
double brute_force_seminorm_pth(const SequenceSpec& a, double p,
                                const WeightSpec& w, std::uint64_t i,
                                PlacementSearchConfig cfg = {});

/// Max over members of brute_force_norm_pth(a) - brute_force_seminorm_pth(a, N).
double brute_force_equinorm_gap(const std::vector<SequenceSpec>& members,
                                double p, const WeightSpec& w, std::uint64_t N,
                                PlacementSearchConfig cfg = {});

} // namespace oracle
} // namespace lorentz

#endif
