#include "lorentz/rearrangement.hpp"

#include <algorithm>
#include <cmath>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

struct Entry {
    std::uint64_t index;
    double value; // |a_index| > 0
};

// Tie-breaking rule: larger value first, smaller index first among equals.
bool rank_before(const Entry& x, const Entry& y) {
    if (x.value != y.value)
        return x.value > y.value;
    return x.index < y.index;
}

std::vector<Entry> collect_nonzero(const SequenceSpec& a, std::uint64_t h) {
    std::vector<Entry> out;
    for (std::uint64_t i = 1; i <= h; ++i) {
        const double v = std::abs(a.term_at(i));
        if (v > 0.0)
            out.push_back({i, v});
    }
    std::sort(out.begin(), out.end(), rank_before);
    return out;
}

} // namespace

RearrangementPrefix rearrangement_prefix(const SequenceSpec& a, std::uint64_t n,
                                         std::uint64_t budget) {
    RearrangementPrefix out;
    if (n == 0)
        return out;

    const auto cap = a.exact_horizon();
    std::uint64_t h = std::max<std::uint64_t>(n, 16);
    for (;;) {
        const std::uint64_t h_eff = cap ? std::min(h, *cap) : h;
        auto ranked = collect_nonzero(a, h_eff);
        const double tail_sup = a.tail_abs_sup(h_eff);

        const bool have_n = ranked.size() >= n;
        if (have_n && tail_sup < ranked[n - 1].value) {
            for (std::uint64_t k = 0; k < n; ++k) {
                out.indices.emplace_back(ranked[k].index);
                out.values.push_back(ranked[k].value);
            }
            return out;
        }
        if (!have_n && tail_sup == 0.0) {
            // Every nonzero entry is already in view; pad the remainder.
            for (const auto& e : ranked) {
                out.indices.emplace_back(e.index);
                out.values.push_back(e.value);
            }
            out.indices.resize(n, std::nullopt);
            out.values.resize(n, 0.0);
            return out;
        }
        if (cap && h_eff == *cap)
            throw HorizonExhausted(
                "envelope beyond the cutoff cannot be separated from rank n");
        if (h >= budget)
            throw HorizonExhausted("horizon budget exhausted before rank n was certified");
        h = std::min(budget, h * 2);
    }
}

std::optional<std::uint64_t> sigma_inverse_at(const SequenceSpec& a,
                                              std::uint64_t j,
                                              std::uint64_t budget) {
    const double t = std::abs(a.term_at(j));
    if (t == 0.0)
        return std::nullopt;

    const auto cap = a.exact_horizon();
    std::uint64_t h = std::max<std::uint64_t>(j, 16);
    for (;;) {
        const std::uint64_t h_eff = cap ? std::min(h, *cap) : h;
        const double tail_sup = a.tail_abs_sup(h_eff);
        // Entries past h_eff cannot precede j once their bound drops to t:
        // strictly larger values are excluded, and equal values lose the tie
        // by index (they all lie beyond j <= h_eff).
        if (h_eff >= j && tail_sup <= t) {
            std::uint64_t rank = 1;
            for (std::uint64_t i = 1; i <= h_eff; ++i) {
                if (i == j)
                    continue;
                const double v = std::abs(a.term_at(i));
                if (v > t || (v == t && i < j))
                    ++rank;
            }
            return rank;
        }
        if (cap && h_eff == *cap)
            throw HorizonExhausted(
                "envelope beyond the cutoff cannot certify the rank of this index");
        if (h >= budget)
            throw HorizonExhausted("horizon budget exhausted before the rank was certified");
        h = std::min(budget, h * 2);
    }
}

} // namespace lorentz
