#ifndef LORENTZ_SELFTEST_HPP
#define LORENTZ_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lorentz/sequences.hpp"

namespace lorentz {
namespace selftest {

/// Outcome of one seeded property suite.
struct SuiteReport {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages; // first few failure descriptions
    bool ok() const { return failures == 0; }
};

/// Random finitely supported sequence: length <= max_len, entries in
/// [-10, 10], ties injected with probability tie_prob.
SequenceSpec random_finite(std::mt19937_64& rng, std::size_t max_len = 7,
                           double tie_prob = 0.3);

// Each suite runs `trials` seeded random instances and checks one family of
// invariants; a trial may cover several weight/exponent combinations.
SuiteReport oracle_equivalence(std::uint64_t seed, std::uint64_t trials);
SuiteReport permutation_dominance(std::uint64_t seed, std::uint64_t trials);
SuiteReport seminorm_monotonicity(std::uint64_t seed, std::uint64_t trials);
SuiteReport seminorm_convergence(std::uint64_t seed, std::uint64_t trials);
SuiteReport decomposition_chain(std::uint64_t seed, std::uint64_t trials);
SuiteReport domination_monotonicity(std::uint64_t seed, std::uint64_t trials);
SuiteReport lambda_soundness(std::uint64_t seed, std::uint64_t trials);
SuiteReport gamma_soundness(std::uint64_t seed, std::uint64_t trials);
/// Weak propagation: the difference family of an equinormed family is
/// equinormed at 2^p * eps for some finite index.
SuiteReport difference_propagation(std::uint64_t seed, std::uint64_t families);
/// Quantitative propagation: the difference-family gap at A's index N(eps)
/// stays within 2^p * eps.
SuiteReport difference_gap_bound(std::uint64_t seed, std::uint64_t families);

std::vector<SuiteReport> run_all(std::uint64_t seed, std::uint64_t trials);

} // namespace selftest
} // namespace lorentz

#endif
