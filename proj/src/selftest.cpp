#include "lorentz/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "lorentz/compactness.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/oracle.hpp"

namespace lorentz {
namespace selftest {

namespace {

const std::vector<double> kPs = {1.0, 2.0};

std::vector<WeightSpec> test_weights() {
    return {WeightSpec::power_decay(1.0), WeightSpec::power_decay(0.5)};
}

void record_failure(SuiteReport& rep, const std::string& msg) {
    ++rep.failures;
    if (rep.messages.size() < 5)
        rep.messages.push_back(msg);
}

} // namespace

SequenceSpec random_finite(std::mt19937_64& rng, std::size_t max_len,
                           double tie_prob) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_real_distribution<double> val_dist(-10.0, 10.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution sign(0.5);

    const std::size_t len = len_dist(rng);
    std::vector<double> entries;
    std::vector<double> magnitudes;
    for (std::size_t k = 0; k < len; ++k) {
        double v;
        if (!magnitudes.empty() && unit(rng) < tie_prob) {
            std::uniform_int_distribution<std::size_t> pick(0, magnitudes.size() - 1);
            v = magnitudes[pick(rng)] * (sign(rng) ? 1.0 : -1.0);
        } else {
            v = val_dist(rng);
            if (unit(rng) < 0.1)
                v = 0.0;
        }
        entries.push_back(v);
        if (v != 0.0)
            magnitudes.push_back(std::abs(v));
    }
    return SequenceSpec::finite(std::move(entries));
}

SuiteReport oracle_equivalence(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "oracle-equivalence";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto a = random_finite(rng);
        for (const auto& w : ws) {
            for (double p : kPs) {
                const double lib = lorentz_norm_pth(a, p, w).mid();
                const double ref = oracle::brute_force_norm_pth(a, p, w);
                if (std::abs(lib - ref) > 1e-12 * std::max(1.0, std::abs(ref))) {
                    std::ostringstream os;
                    os << "trial " << t << ": library " << lib
                       << " != brute force " << ref;
                    record_failure(rep, os.str());
                }
            }
        }
    }
    return rep;
}

SuiteReport permutation_dominance(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "permutation-dominance";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    std::uniform_int_distribution<std::size_t> wpick(0, 1);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto a = random_finite(rng);
        const auto& w = ws[wpick(rng)];
        const double p = kPs[ppick(rng)];
        const double norm_hi = lorentz_norm_pth(a, p, w).hi;

        // One random injective placement of the support.
        std::vector<double> support;
        for (double v : a.entries())
            if (v != 0.0)
                support.push_back(std::abs(v));
        std::vector<std::uint64_t> positions;
        std::set<std::uint64_t> taken;
        std::uniform_int_distribution<std::uint64_t> pos_dist(1, support.size() + 10);
        while (positions.size() < support.size()) {
            const auto pos = pos_dist(rng);
            if (taken.insert(pos).second)
                positions.push_back(pos);
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < support.size(); ++k)
            sum += std::pow(support[k], p) * w.at(positions[k]);
        if (sum > norm_hi + 1e-12) {
            std::ostringstream os;
            os << "trial " << t << ": placement value " << sum
               << " exceeds the norm " << norm_hi;
            record_failure(rep, os.str());
        }
    }
    return rep;
}

SuiteReport seminorm_monotonicity(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "seminorm-monotonicity";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    std::uniform_int_distribution<std::size_t> wpick(0, 1);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto a = random_finite(rng);
        const auto& w = ws[wpick(rng)];
        const double p = kPs[ppick(rng)];
        double prev = 0.0;
        for (std::uint64_t i = 0; i <= 15; ++i) {
            const double s = seminorm_pth(a, p, w, i);
            if (s < prev - 1e-12) {
                std::ostringstream os;
                os << "trial " << t << ": S_" << i << " = " << s << " < S_"
                   << i - 1 << " = " << prev;
                record_failure(rep, os.str());
            }
            prev = s;
        }
    }
    return rep;
}

SuiteReport seminorm_convergence(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "seminorm-convergence";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    std::uniform_int_distribution<std::size_t> wpick(0, 1);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto a = random_finite(rng);
        const auto& w = ws[wpick(rng)];
        const double p = kPs[ppick(rng)];
        const Interval norm = lorentz_norm_pth(a, p, w);
        // For finite support the seminorm reaches the norm at the length.
        const double s = seminorm_pth(a, p, w, a.entries().size());
        if (s < norm.lo - 1e-9 || s > norm.hi + 1e-9) {
            std::ostringstream os;
            os << "trial " << t << ": S_len = " << s << " outside ["
               << norm.lo << ", " << norm.hi << "]";
            record_failure(rep, os.str());
        }
    }
    // Analytic fixtures: S_n must enter the certified norm interval.
    {
        ++rep.trials;
        const auto fixtures = std::vector<SequenceSpec>{
            SequenceSpec::power(1.0, 1.0), SequenceSpec::geometric(2.0, 0.5)};
        const auto w = WeightSpec::power_decay(1.0);
        for (const auto& a : fixtures) {
            const Interval norm = lorentz_norm_pth(a, 1.0, w, 1e-4);
            bool entered = false;
            for (std::uint64_t n = 16; n <= (1u << 20); n *= 2) {
                if (seminorm_pth(a, 1.0, w, n) >= norm.lo - 1e-12) {
                    entered = true;
                    break;
                }
            }
            if (!entered)
                record_failure(rep, "analytic fixture: S_n never entered the norm interval");
        }
    }
    return rep;
}

SuiteReport decomposition_chain(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "decomposition-chain";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    std::uniform_int_distribution<std::size_t> wpick(0, 1);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto a = random_finite(rng);
        const auto& w = ws[wpick(rng)];
        const double p = kPs[ppick(rng)];
        for (std::uint64_t i = 0; i <= 20; ++i) {
            const auto rec = decompose(a, p, w, i);
            const double slack = 1e-9 * std::max(1.0, rec.norm_pth.hi);
            bool bad = false;
            bad |= rec.S.lo + rec.S_tilde.lo > rec.norm_pth.hi + slack;
            bad |= !(rec.H + rec.H_tilde).overlaps(
                Interval{rec.norm_pth.lo - slack, rec.norm_pth.hi + slack});
            bad |= !(rec.W + rec.W_tilde).overlaps(
                Interval{rec.norm_pth.lo - slack, rec.norm_pth.hi + slack});
            bad |= rec.norm_pth.lo > rec.S.hi + rec.T.hi + slack;
            if (bad) {
                std::ostringstream os;
                os << "trial " << t << ", split " << i << ": chain violated";
                record_failure(rep, os.str());
            }
        }
    }
    return rep;
}

SuiteReport domination_monotonicity(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "domination-monotonicity";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    std::uniform_int_distribution<std::size_t> wpick(0, 1);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    std::uniform_real_distribution<double> shrink(-1.0, 1.0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto g_raw = random_finite(rng);
        std::vector<double> g_abs, a_vals;
        for (double v : g_raw.entries()) {
            g_abs.push_back(std::abs(v));
            a_vals.push_back(std::abs(v) * shrink(rng));
        }
        const auto g = SequenceSpec::finite(g_abs);
        const auto a = SequenceSpec::finite(a_vals);
        const auto& w = ws[wpick(rng)];
        const double p = kPs[ppick(rng)];
        if (lorentz_norm_pth(a, p, w).lo > lorentz_norm_pth(g, p, w).hi + 1e-12)
            record_failure(rep, "norm domination violated");
        for (std::uint64_t i = 0; i <= 10; ++i) {
            if (tail_norm_pth(a, p, w, i).lo > tail_norm_pth(g, p, w, i).hi + 1e-12)
                record_failure(rep, "tail-norm domination violated");
        }
    }
    return rep;
}

SuiteReport lambda_soundness(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "lambda-soundness";
    std::mt19937_64 rng(seed);
    const auto ws = test_weights();
    std::uniform_int_distribution<std::size_t> wpick(0, 1);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    std::uniform_real_distribution<double> d_dist(0.05, 5.0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const auto a = random_finite(rng);
        const auto& w = ws[wpick(rng)];
        const double p = kPs[ppick(rng)];
        const double M = lorentz_norm_pth(a, p, w).hi;
        // keep lambda itself scannable: for harmonic weights it grows like
        // exp(M / d^p), so d must not dwarf the norm bound
        const double d = std::max(d_dist(rng), std::pow(M / 15.0, 1.0 / p));
        std::uint64_t count = 0;
        for (double v : a.entries())
            if (std::abs(v) >= d)
                ++count;
        if (count > lambda_of(M, d, p, w)) {
            std::ostringstream os;
            os << "trial " << t << ": " << count
               << " entries >= " << d << " exceed lambda(" << M << ")";
            record_failure(rep, os.str());
        }
    }
    return rep;
}

SuiteReport gamma_soundness(std::uint64_t seed, std::uint64_t trials) {
    SuiteReport rep;
    rep.name = "gamma-soundness";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d_dist(0.05, 5.0);
    std::uniform_int_distribution<std::size_t> count_dist(1, 4);
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        std::vector<SequenceSpec> members;
        const std::size_t k = count_dist(rng);
        for (std::size_t j = 0; j < k; ++j)
            members.push_back(random_finite(rng));
        const auto A = FamilySpec::explicit_finite(members);
        const double d = d_dist(rng);
        const auto g = gamma_of(A, d);
        if (std::holds_alternative<Infinite>(g)) {
            record_failure(rep, "finite family reported as not uniformly vanishing");
            continue;
        }
        const std::uint64_t N = std::get<std::uint64_t>(g);
        for (const auto& m : members)
            for (std::uint64_t n = N; n <= N + 16; ++n)
                if (std::abs(m.term_at(n)) >= d)
                    record_failure(rep, "entry at or beyond gamma reaches d");
        for (std::uint64_t n = 1; n <= 8; ++n) {
            const double maj = gamma_inverse_at(A, n);
            for (const auto& m : members)
                if (std::abs(m.term_at(n)) > maj + 1e-9)
                    record_failure(rep, "majorant fails to dominate an entry");
        }
    }
    return rep;
}

SuiteReport difference_propagation(std::uint64_t seed, std::uint64_t families) {
    SuiteReport rep;
    rep.name = "difference-propagation";
    std::mt19937_64 rng(seed);
    const auto w = WeightSpec::power_decay(1.0);
    std::uniform_int_distribution<std::size_t> count_dist(2, 4);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    for (std::uint64_t t = 0; t < families; ++t) {
        ++rep.trials;
        std::vector<SequenceSpec> members;
        const std::size_t k = count_dist(rng);
        for (std::size_t j = 0; j < k; ++j)
            members.push_back(random_finite(rng));
        const auto A = FamilySpec::explicit_finite(members);
        const double p = kPs[ppick(rng)];
        const double eps = 0.1;
        const auto rA = min_equinorm_index(A, p, w, eps);
        if (!std::holds_alternative<std::uint64_t>(rA)) {
            record_failure(rep, "finite family reported as not equinormed");
            continue;
        }
        const auto B = difference_family(A);
        const auto rB = min_equinorm_index(B, p, w, std::pow(2.0, p) * eps);
        if (!std::holds_alternative<std::uint64_t>(rB))
            record_failure(rep, "difference family not equinormed at 2^p * eps");
    }
    return rep;
}

SuiteReport difference_gap_bound(std::uint64_t seed, std::uint64_t families) {
    SuiteReport rep;
    rep.name = "difference-gap-bound";
    std::mt19937_64 rng(seed);
    const auto w = WeightSpec::power_decay(1.0);
    std::uniform_int_distribution<std::size_t> count_dist(2, 4);
    std::uniform_int_distribution<std::size_t> ppick(0, 1);
    for (std::uint64_t t = 0; t < families; ++t) {
        ++rep.trials;
        std::vector<SequenceSpec> members;
        const std::size_t k = count_dist(rng);
        for (std::size_t j = 0; j < k; ++j)
            members.push_back(random_finite(rng));
        const auto A = FamilySpec::explicit_finite(members);
        const double p = kPs[ppick(rng)];
        const double eps = 0.1;
        const auto rA = min_equinorm_index(A, p, w, eps);
        if (!std::holds_alternative<std::uint64_t>(rA))
            continue;
        const std::uint64_t N = std::get<std::uint64_t>(rA);
        // Premise: A's gap at N(eps) is <= eps, by construction of N(eps).
        const auto B = difference_family(A);
        double gap = 0.0;
        for (const auto& b : B.members())
            gap = std::max(gap, lorentz_norm_pth(b, p, w).hi -
                                    seminorm_pth(b, p, w, N));
        if (gap > std::pow(2.0, p) * eps + 1e-12) {
            std::ostringstream os;
            os << "family " << t << ": difference gap " << gap
               << " exceeds 2^p * eps at N = " << N;
            record_failure(rep, os.str());
        }
    }
    return rep;
}

std::vector<SuiteReport> run_all(std::uint64_t seed, std::uint64_t trials) {
    return {
        oracle_equivalence(seed, trials),
        permutation_dominance(seed + 1, trials),
        seminorm_monotonicity(seed + 2, trials),
        seminorm_convergence(seed + 3, trials),
        decomposition_chain(seed + 4, trials),
        domination_monotonicity(seed + 5, trials),
        lambda_soundness(seed + 6, trials),
        gamma_soundness(seed + 7, trials),
        difference_propagation(seed + 8, std::max<std::uint64_t>(1, trials / 5)),
        difference_gap_bound(seed + 9, std::max<std::uint64_t>(1, trials / 5)),
    };
}

} // namespace selftest
} // namespace lorentz
