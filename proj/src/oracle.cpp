#include "lorentz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lorentz/errors.hpp"

namespace lorentz {
namespace oracle {

namespace {

// DFS over all injective assignments of values to positions 1..n_pos.
void search(const std::vector<double>& vals_pth, std::size_t next,
            std::vector<bool>& used, const std::vector<double>& weights,
            double partial, double& best) {
    if (next == vals_pth.size()) {
        best = std::max(best, partial);
        return;
    }
    for (std::size_t pos = 0; pos < weights.size(); ++pos) {
        if (used[pos])
            continue;
        used[pos] = true;
        search(vals_pth, next + 1, used, weights, partial + vals_pth[next] * weights[pos], best);
        used[pos] = false;
    }
}

} // namespace

double brute_force_norm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                            PlacementSearchConfig cfg) {
    if (a.kind() != SequenceSpec::Kind::Finite)
        throw UnsupportedVariant("the oracle handles Finite sequences only");
    std::vector<double> vals_pth;
    for (double v : a.entries())
        if (v != 0.0)
            vals_pth.push_back(std::pow(std::abs(v), p));
    if (vals_pth.size() > cfg.max_support)
        throw SupportTooLarge("support exceeds the exhaustive-search cap");
    if (vals_pth.empty())
        return 0.0;

    std::vector<double> weights(vals_pth.size() + cfg.slack);
    for (std::size_t k = 0; k < weights.size(); ++k)
        weights[k] = w.at(k + 1);

    double best = 0.0;
    std::vector<bool> used(weights.size(), false);
    search(vals_pth, 0, used, weights, 0.0, best);
    return best;
}

double brute_force_seminorm_pth(const SequenceSpec& a, double p,
                                const WeightSpec& w, std::uint64_t i,
                                PlacementSearchConfig cfg) {
    if (i > cfg.max_support)
        throw SupportTooLarge("permutation size exceeds the exhaustive-search cap");
    std::vector<double> vals_pth;
    for (std::uint64_t j = 1; j <= i; ++j)
        vals_pth.push_back(std::pow(std::abs(a.term_at(j)), p));

    std::vector<std::size_t> perm(i);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> weights(i);
    for (std::uint64_t k = 0; k < i; ++k)
        weights[k] = w.at(k + 1);

    double best = 0.0;
    do {
        double sum = 0.0;
        for (std::uint64_t k = 0; k < i; ++k)
            sum += vals_pth[k] * weights[perm[k]];
        best = std::max(best, sum);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double brute_force_equinorm_gap(const std::vector<SequenceSpec>& members,
                                double p, const WeightSpec& w, std::uint64_t N,
                                PlacementSearchConfig cfg) {
    double gap = 0.0;
    for (const auto& m : members) {
        // Entries beyond the stored length are zero and contribute nothing
        // under any permutation, so the effective index can be clamped.
        const std::uint64_t i = std::min<std::uint64_t>(N, m.entries().size());
        gap = std::max(gap, brute_force_norm_pth(m, p, w, cfg) -
                                brute_force_seminorm_pth(m, p, w, i, cfg));
    }
    return gap;
}

} // namespace oracle
} // namespace lorentz
