#include "lorentz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_p(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw SpecError("p must be a finite real >= 1");
}

// Absolute values of the nonzero entries, nonincreasing.
std::vector<double> sorted_abs_nonzero(const std::vector<double>& entries) {
    std::vector<double> vals;
    vals.reserve(entries.size());
    for (double v : entries)
        if (v != 0.0)
            vals.push_back(std::abs(v));
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

// sum_k vals[k]^p * w_{weight_offset + k + 1} for nonincreasing vals; this is
// the optimal pairing, so for finite supports it is the exact norm quantity.
double paired_sum(const std::vector<double>& vals, double p, const WeightSpec& w,
                  std::uint64_t weight_offset = 0) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        const double y = std::pow(vals[k], p) * w.at(weight_offset + k + 1) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// Enclosure of sum_{j >= start_j} cp * (shift + j)^(-sp) * w_j.
// Remainders past the explicit partial sum are certified by the integral
// test, which requires q = sp + beta > 1.
Interval power_tail_sum(double cp, double sp, std::uint64_t shift,
                        const WeightSpec& w, std::uint64_t start_j, double tol,
                        std::uint64_t budget, bool enforce) {
    const double q = sp + w.tail_beta();
    if (cp == 0.0)
        return Interval::point(0.0);
    if (q <= 1.0)
        throw NotSummable("series exponent s*p + beta <= 1 diverges");

    double sum = 0.0, comp = 0.0;
    std::uint64_t j = start_j;
    std::uint64_t checkpoint = std::max<std::uint64_t>(
        {start_j + 16, w.tail_start(), 64});
    for (;;) {
        for (; j <= checkpoint; ++j) {
            const double term =
                cp * std::pow(static_cast<double>(shift + j), -sp) * w.at(j);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        // j == checkpoint + 1 and j - 1 >= tail_start, so the closed-form
        // weight holds for everything past the partial sum.
        const double n = static_cast<double>(j - 1);
        const double upper_rem = cp * std::pow(n, 1.0 - q) / (q - 1.0);
        const double lower_rem =
            cp * std::pow(static_cast<double>(shift) + n + 1.0, 1.0 - q) / (q - 1.0);
        if (upper_rem - lower_rem <= tol)
            return {sum + lower_rem, sum + upper_rem};
        if (checkpoint >= budget) {
            if (enforce)
                throw BudgetExhausted("tolerance unreachable within the term budget");
            return {sum + lower_rem, sum + upper_rem};
        }
        checkpoint = std::min(budget, checkpoint * 2);
    }
}

// Enclosure of sum_{j >= start_j} cp * qr^(shift + j) * w_j with qr in [0, 1).
Interval geometric_tail_sum(double cp, double qr, std::uint64_t shift,
                            const WeightSpec& w, std::uint64_t start_j,
                            double tol, std::uint64_t budget, bool enforce) {
    if (cp == 0.0 || qr == 0.0)
        return Interval::point(0.0);
    double sum = 0.0, comp = 0.0;
    std::uint64_t j = start_j;
    std::uint64_t checkpoint = start_j + 16;
    for (;;) {
        for (; j <= checkpoint; ++j) {
            const double term =
                cp * std::pow(qr, static_cast<double>(shift + j)) * w.at(j);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        const double upper_rem = cp * w.at(j) *
                                 std::pow(qr, static_cast<double>(shift + j)) /
                                 (1.0 - qr);
        if (upper_rem <= tol)
            return {sum, sum + upper_rem};
        if (checkpoint >= budget) {
            if (enforce)
                throw BudgetExhausted("tolerance unreachable within the term budget");
            return {sum, sum + upper_rem};
        }
        checkpoint = std::min(budget, checkpoint * 2);
    }
}

// Upper bound on sum_{j>=1} env(cutoff + j)^p * w_j: the worst injective
// pairing of the envelope tail against the weight sequence.
double env_weighted_tail_upper(const Envelope& env, double p, const WeightSpec& w,
                               std::uint64_t cutoff, double tol,
                               std::uint64_t budget) {
    if (env.coeff() == 0.0)
        return 0.0;
    const double cp = std::pow(env.coeff(), p);
    double sum = 0.0;
    std::uint64_t j = 1;
    std::uint64_t checkpoint = std::max<std::uint64_t>(w.tail_start(), 64);
    for (;;) {
        for (; j <= checkpoint; ++j)
            sum += std::pow(env.at(cutoff + j), p) * w.at(j);
        double rem;
        if (env.kind() == Envelope::Kind::GeometricTail) {
            const double qr = std::pow(env.param(), p);
            rem = cp * std::pow(qr, static_cast<double>(cutoff + j)) / (1.0 - qr);
        } else {
            // env(cutoff+j)^p * w_j <= cp * j^-(sp + beta) for j past the
            // weight prefix.
            const double q = env.param() * p + w.tail_beta();
            if (q <= 1.0)
                return kInf;
            rem = cp * std::pow(static_cast<double>(j - 1), 1.0 - q) / (q - 1.0);
        }
        if (rem <= tol || checkpoint >= budget)
            return sum + rem;
        checkpoint = std::min(budget, checkpoint * 2);
    }
}

// Enclosure of ||a||_{p,w}^p assuming membership was already established.
Interval norm_enclosure(const SequenceSpec& a, double p, const WeightSpec& w,
                        double tol, std::uint64_t budget, bool enforce) {
    if (a.is_identically_zero())
        return Interval::point(0.0);
    switch (a.kind()) {
    case SequenceSpec::Kind::Finite:
        return Interval::point(paired_sum(sorted_abs_nonzero(a.entries()), p, w));
    case SequenceSpec::Kind::Power: {
        const double cp = std::pow(std::abs(a.coeff()), p);
        return power_tail_sum(cp, a.param() * p, 0, w, 1, tol, budget, enforce);
    }
    case SequenceSpec::Kind::Geometric: {
        const double cp = std::pow(std::abs(a.coeff()), p);
        const double qr = std::pow(std::abs(a.param()), p);
        return geometric_tail_sum(cp, qr, 0, w, 1, tol, budget, enforce);
    }
    case SequenceSpec::Kind::Tabled: {
        const double base = paired_sum(sorted_abs_nonzero(a.entries()), p, w);
        const double u = env_weighted_tail_upper(a.envelope(), p, w,
                                                 a.entries().size(), tol / 2,
                                                 budget);
        if (!std::isfinite(u))
            throw NotSummable("envelope tail sum diverges");
        if (enforce && u > tol)
            throw BudgetExhausted(
                "envelope tail bound exceeds the requested tolerance");
        return {base, base + u};
    }
    }
    throw SpecError("unreachable");
}

} // namespace

double p_norm(const SequenceSpec& a, double p) {
    require_p(p);
    if (a.kind() != SequenceSpec::Kind::Finite)
        throw UnsupportedVariant("p_norm is defined for Finite sequences only");
    double sum = 0.0;
    for (double v : a.entries())
        sum += std::pow(std::abs(v), p);
    return std::pow(sum, 1.0 / p);
}

MembershipVerdict classify_membership(const SequenceSpec& a, double p,
                                      const WeightSpec& w, std::uint64_t budget) {
    require_p(p);
    if (a.is_identically_zero())
        return Member{Interval::point(0.0)};
    switch (a.kind()) {
    case SequenceSpec::Kind::Finite:
        return Member{norm_enclosure(a, p, w, kDefaultTol, budget, false)};
    case SequenceSpec::Kind::Power: {
        if (a.param() <= 0.0) {
            std::ostringstream os;
            os << "|a_i| = " << std::abs(a.coeff()) << "*i^(" << -a.param()
               << ") does not tend to 0; no nonincreasing rearrangement covers "
                  "the support";
            return NotMember{os.str()};
        }
        const double q = a.param() * p + w.tail_beta();
        if (q <= 1.0) {
            std::ostringstream os;
            os << "p-series test: s*p + beta = " << q
               << " <= 1, so the rearranged series diverges";
            return NotMember{os.str()};
        }
        return Member{norm_enclosure(a, p, w, kDefaultTol, budget, false)};
    }
    case SequenceSpec::Kind::Geometric:
        return Member{norm_enclosure(a, p, w, kDefaultTol, budget, false)};
    case SequenceSpec::Kind::Tabled: {
        const Envelope& env = a.envelope();
        const bool converges =
            env.kind() == Envelope::Kind::GeometricTail ||
            env.coeff() == 0.0 || env.param() * p + w.tail_beta() > 1.0;
        if (!converges)
            return Inconclusive{
                paired_sum(sorted_abs_nonzero(a.entries()), p, w),
                a.entries().size()};
        return Member{norm_enclosure(a, p, w, kDefaultTol, budget, false)};
    }
    }
    throw SpecError("unreachable");
}

Interval lorentz_norm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                          double tol, std::uint64_t budget) {
    require_p(p);
    if (!(tol > 0.0))
        throw SpecError("tol must be positive");
    const auto verdict = classify_membership(a, p, w, budget);
    if (const auto* nm = std::get_if<NotMember>(&verdict))
        throw NotSummable(nm->reason);
    if (std::holds_alternative<Inconclusive>(verdict))
        throw NotSummable("membership is inconclusive for this sequence");
    return norm_enclosure(a, p, w, tol, budget, true);
}

double seminorm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                    std::uint64_t i) {
    require_p(p);
    std::vector<double> head;
    head.reserve(i);
    for (std::uint64_t j = 1; j <= i; ++j)
        head.push_back(a.term_at(j));
    return paired_sum(sorted_abs_nonzero(head), p, w);
}

Interval tail_norm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                       std::uint64_t i, double tol, std::uint64_t budget) {
    require_p(p);
    switch (a.kind()) {
    case SequenceSpec::Kind::Finite: {
        const auto& e = a.entries();
        std::vector<double> tail(e.begin() + std::min<std::size_t>(i, e.size()),
                                 e.end());
        return Interval::point(paired_sum(sorted_abs_nonzero(tail), p, w));
    }
    case SequenceSpec::Kind::Power: {
        if (a.coeff() == 0.0)
            return Interval::point(0.0);
        if (a.param() <= 0.0)
            throw NotSummable("power sequence terms do not tend to 0");
        const double cp = std::pow(std::abs(a.coeff()), p);
        return power_tail_sum(cp, a.param() * p, i, w, 1, tol, budget, true);
    }
    case SequenceSpec::Kind::Geometric: {
        const double cp = std::pow(std::abs(a.coeff()), p);
        const double qr = std::pow(std::abs(a.param()), p);
        return geometric_tail_sum(cp, qr, i, w, 1, tol, budget, true);
    }
    case SequenceSpec::Kind::Tabled: {
        const auto& e = a.entries();
        std::vector<double> tail(e.begin() + std::min<std::size_t>(i, e.size()),
                                 e.end());
        const double t_lo = paired_sum(sorted_abs_nonzero(tail), p, w);
        const double u = env_weighted_tail_upper(
            a.envelope(), p, w, std::max<std::uint64_t>(i, e.size()), tol / 2,
            budget);
        if (!std::isfinite(u))
            throw NotSummable("envelope tail sum diverges");
        return {t_lo, t_lo + u};
    }
    }
    throw SpecError("unreachable");
}

DecompositionRecord decompose(const SequenceSpec& a, double p,
                              const WeightSpec& w, std::uint64_t i, double tol,
                              std::uint64_t budget) {
    require_p(p);
    const auto verdict = classify_membership(a, p, w, budget);
    if (const auto* nm = std::get_if<NotMember>(&verdict))
        throw NotSummable(nm->reason);
    if (std::holds_alternative<Inconclusive>(verdict))
        throw NotSummable("membership is inconclusive for this sequence");

    DecompositionRecord rec;
    rec.split = i;
    rec.norm_pth = norm_enclosure(a, p, w, tol, budget, true);
    rec.S = Interval::point(seminorm_pth(a, p, w, i));

    // Head by weight rank: the first i ranks of the global rearrangement.
    {
        double sum = 0.0;
        if (i > 0) {
            const auto prefix = rearrangement_prefix(a, i, budget);
            for (std::uint64_t k = 0; k < i; ++k)
                if (prefix.values[k] > 0.0)
                    sum += std::pow(prefix.values[k], p) * w.at(k + 1);
        }
        rec.W = Interval::point(sum);
    }

    // Head by original index, with the zero-weight convention.
    {
        double sum = 0.0;
        for (std::uint64_t j = 1; j <= i; ++j) {
            const double v = std::abs(a.term_at(j));
            if (v == 0.0)
                continue;
            const auto rank = sigma_inverse_at(a, j, budget);
            sum += std::pow(v, p) * w.at(*rank);
        }
        rec.H = Interval::point(sum);
    }

    const double cp = std::pow(std::abs(a.coeff()), p);
    switch (a.kind()) {
    case SequenceSpec::Kind::Finite: {
        const auto& e = a.entries();
        std::vector<double> tail(e.begin() + std::min<std::size_t>(i, e.size()),
                                 e.end());
        const auto tail_sorted = sorted_abs_nonzero(tail);
        rec.T = Interval::point(paired_sum(tail_sorted, p, w));
        rec.S_tilde = Interval::point(paired_sum(tail_sorted, p, w, i));
        double h_tilde = 0.0;
        for (std::uint64_t j = i + 1; j <= e.size(); ++j) {
            const double v = std::abs(e[j - 1]);
            if (v == 0.0)
                continue;
            h_tilde += std::pow(v, p) * w.at(*sigma_inverse_at(a, j, budget));
        }
        rec.H_tilde = Interval::point(h_tilde);
        // Tail by weight rank: ranks i+1 .. nnz of the global rearrangement.
        const auto all = sorted_abs_nonzero(e);
        double w_tilde = 0.0;
        for (std::uint64_t k = i; k < all.size(); ++k)
            w_tilde += std::pow(all[k], p) * w.at(k + 1);
        rec.W_tilde = Interval::point(w_tilde);
        break;
    }
    case SequenceSpec::Kind::Power: {
        const double sp = a.param() * p;
        rec.S_tilde = a.is_identically_zero()
                          ? Interval::point(0.0)
                          : power_tail_sum(cp, sp, 0, w, i + 1, tol, budget, true);
        rec.T = a.is_identically_zero()
                    ? Interval::point(0.0)
                    : power_tail_sum(cp, sp, i, w, 1, tol, budget, true);
        rec.H_tilde = rec.norm_pth.minus_clamped(rec.H);
        rec.W_tilde = rec.norm_pth.minus_clamped(rec.W);
        break;
    }
    case SequenceSpec::Kind::Geometric: {
        const double qr = std::pow(std::abs(a.param()), p);
        rec.S_tilde = geometric_tail_sum(cp, qr, 0, w, i + 1, tol, budget, true);
        rec.T = geometric_tail_sum(cp, qr, i, w, 1, tol, budget, true);
        rec.H_tilde = rec.norm_pth.minus_clamped(rec.H);
        rec.W_tilde = rec.norm_pth.minus_clamped(rec.W);
        break;
    }
    case SequenceSpec::Kind::Tabled: {
        const auto& e = a.entries();
        if (i > e.size())
            throw UnknownTerm("split index beyond the tabled cutoff");
        std::vector<double> tail(e.begin() + i, e.end());
        const auto tail_sorted = sorted_abs_nonzero(tail);
        const double u = env_weighted_tail_upper(a.envelope(), p, w, e.size(),
                                                 tol / 2, budget);
        const double t_lo = paired_sum(tail_sorted, p, w);
        const double s_lo = paired_sum(tail_sorted, p, w, i);
        rec.T = {t_lo, t_lo + u};
        rec.S_tilde = {s_lo, s_lo + u};
        rec.H_tilde = rec.norm_pth.minus_clamped(rec.H);
        rec.W_tilde = rec.norm_pth.minus_clamped(rec.W);
        break;
    }
    }
    return rec;
}

} // namespace lorentz
