#ifndef LORENTZ_WEIGHTS_HPP
#define LORENTZ_WEIGHTS_HPP

#include <cstdint>
#include <vector>

namespace lorentz {

/// A weight sequence: w_1 = 1, positive, nonincreasing, tending to 0,
/// with divergent partial sums.
///
/// Two variants are supported:
///   - PowerDecay(beta):  w_i = i^(-beta), beta in (0, 1]
///   - ExplicitPrefix:    a finite list of values followed by a PowerDecay
///     tail; the prefix/tail junction must preserve monotonicity.
///
/// Immutable after construction; all accessors are pure and thread-safe.
class WeightSpec {
public:
    static WeightSpec power_decay(double beta);
    static WeightSpec explicit_prefix(std::vector<double> values, double tail_beta);

    /// w_i for i >= 1. Exact for prefix entries, closed-form beyond.
    double at(std::uint64_t i) const;

    /// Sum of w_1 .. w_n (compensated summation); 0 for n = 0.
    double prefix_sum(std::uint64_t n) const;

    /// Exponent of the power-decay tail.
    double tail_beta() const { return beta_; }

    const std::vector<double>& prefix() const { return prefix_; }

    /// First index at which w_i == i^(-beta) holds exactly.
    std::uint64_t tail_start() const { return prefix_.size() + 1; }

private:
    WeightSpec(std::vector<double> prefix, double beta);

    std::vector<double> prefix_;
    double beta_;
};

} // namespace lorentz

#endif
