#include "lorentz/weights.hpp"

#include <cmath>

#include "lorentz/errors.hpp"

namespace lorentz {

WeightSpec::WeightSpec(std::vector<double> prefix, double beta)
    : prefix_(std::move(prefix)), beta_(beta) {}

WeightSpec WeightSpec::power_decay(double beta) {
    if (!(beta > 0.0) || !(beta <= 1.0))
        throw SpecError("PowerDecay weight requires beta in (0, 1]");
    return WeightSpec({}, beta);
}

WeightSpec WeightSpec::explicit_prefix(std::vector<double> values, double tail_beta) {
    if (!(tail_beta > 0.0) || !(tail_beta <= 1.0))
        throw SpecError("ExplicitPrefix tail requires beta in (0, 1]");
    if (!values.empty()) {
        if (values.front() != 1.0)
            throw SpecError("weight sequence must start with w_1 = 1");
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (!std::isfinite(values[k]) || !(values[k] > 0.0))
                throw SpecError("weight entries must be finite and positive");
            if (k > 0 && values[k] > values[k - 1])
                throw SpecError("weight entries must be nonincreasing");
        }
        // Junction: the first tail value may not exceed the last prefix value.
        const double first_tail =
            std::pow(static_cast<double>(values.size() + 1), -tail_beta);
        if (first_tail > values.back())
            throw SpecError("prefix/tail junction breaks monotonicity");
    }
    return WeightSpec(std::move(values), tail_beta);
}

double WeightSpec::at(std::uint64_t i) const {
    if (i == 0)
        throw SpecError("weight index must be >= 1");
    if (i <= prefix_.size())
        return prefix_[i - 1];
    return std::pow(static_cast<double>(i), -beta_);
}

double WeightSpec::prefix_sum(std::uint64_t n) const {
    // Kahan summation; error is O(eps * sum), far below working tolerances.
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const double y = at(i) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace lorentz
