#include "lorentz/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Least n in [0, cap] with pred(n) true, assuming pred is monotone
// (false ... false true ... true). Exponential probe, then binary search.
// Returns nullopt when pred is false everywhere up to cap.
std::optional<std::uint64_t> least_true(
    const std::function<bool(std::uint64_t)>& pred, std::uint64_t cap) {
    if (pred(0))
        return 0;
    std::uint64_t lo = 0; // known false
    std::uint64_t hi = 1;
    while (hi < cap && !pred(hi)) {
        lo = hi;
        hi = std::min(cap, hi * 2);
    }
    if (!pred(hi))
        return std::nullopt;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

struct AbsSup {
    double lo = 0.0; // certified attained value
    double hi = 0.0; // certified upper bound (may be +inf)
};

AbsSup seq_abs_sup(const SequenceSpec& s) {
    switch (s.kind()) {
    case SequenceSpec::Kind::Finite: {
        double m = 0.0;
        for (double v : s.entries())
            m = std::max(m, std::abs(v));
        return {m, m};
    }
    case SequenceSpec::Kind::Power: {
        const double c = std::abs(s.coeff());
        if (c == 0.0)
            return {0.0, 0.0};
        if (s.param() < 0.0)
            return {c, kInf};
        return {c, c}; // attained at i = 1 for s >= 0
    }
    case SequenceSpec::Kind::Geometric: {
        const double v = std::abs(s.coeff()) * std::abs(s.param());
        return {v, v};
    }
    case SequenceSpec::Kind::Tabled: {
        double m = 0.0;
        for (double v : s.entries())
            m = std::max(m, std::abs(v));
        const double env1 = s.envelope().at(s.entries().size() + 1);
        return {m, std::max(m, env1)};
    }
    }
    throw SpecError("unreachable");
}

// Minimal N >= 1 with |a_n| < d for all n >= N, using certified bounds.
GammaResult seq_vanishing_index(const SequenceSpec& s, double d) {
    if (!(d > 0.0))
        throw SpecError("threshold d must be positive");
    // tail_abs_sup(h) bounds sup_{n>h} |a_n| and is nonincreasing in h;
    // minimal N is 1 + (least h with tail_abs_sup(h) < d).
    if (s.kind() == SequenceSpec::Kind::Power && s.coeff() != 0.0) {
        if (s.param() < 0.0)
            return Infinite{};
        if (s.param() == 0.0)
            return std::abs(s.coeff()) < d ? GammaResult{std::uint64_t{1}}
                                           : GammaResult{Infinite{}};
    }
    const auto found = least_true(
        [&](std::uint64_t h) { return s.tail_abs_sup(h) < d; }, kDefaultBudget);
    if (!found)
        return Infinite{};
    return *found + 1;
}

double member_norm_hi(const SequenceSpec& m, double p, const WeightSpec& w,
                      double tol, std::uint64_t budget) {
    return lorentz_norm_pth(m, p, w, tol, budget).hi;
}

// Head of the norm sum by original index (the H_N quantity), exact.
double head_by_index(const SequenceSpec& a, double p, const WeightSpec& w,
                     std::uint64_t n, std::uint64_t budget) {
    double sum = 0.0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        const double v = std::abs(a.term_at(j));
        if (v == 0.0)
            continue;
        sum += std::pow(v, p) * w.at(*sigma_inverse_at(a, j, budget));
    }
    return sum;
}

// Least N with sup_{n>N} |c_n|^p < eps for a ScaledBasis coefficient stream.
EquinormResult scaled_basis_index(const SequenceSpec& coeffs, double p,
                                  double eps, std::uint64_t budget) {
    const double thr = std::pow(eps, 1.0 / p); // |c_n| < thr
    if (coeffs.kind() == SequenceSpec::Kind::Power && coeffs.coeff() != 0.0 &&
        coeffs.param() <= 0.0) {
        const double c = std::abs(coeffs.coeff());
        if (coeffs.param() < 0.0 || c >= thr) {
            std::ostringstream os;
            os << "basis members c_n*e_n keep |c_n|^p >= " << std::pow(c, p)
               << " at arbitrarily late n";
            return NotEquinormed{{os.str(), std::pow(c, p)}};
        }
    }
    const auto found = least_true(
        [&](std::uint64_t n) { return coeffs.tail_abs_sup(n) < thr; }, budget);
    if (!found)
        throw BudgetExhausted("coefficient tail could not be pushed below eps");
    return *found;
}

// Shared Shift/ScaledBasis/Dominated handling for both uniform criteria;
// for ExplicitFinite families the per-member gap function differs.
EquinormResult uniform_index(const FamilySpec& A, double p, const WeightSpec& w,
                             double eps, std::uint64_t budget,
                             bool tail_criterion) {
    if (!(eps > 0.0))
        throw SpecError("eps must be positive");
    const double tol = std::min(kDefaultTol, eps / 4);
    switch (A.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
        const auto& members = A.members();
        std::vector<double> norm_hi;
        norm_hi.reserve(members.size());
        for (const auto& m : members)
            norm_hi.push_back(member_norm_hi(m, p, w, tol, budget));
        bool unknown_terms = false;
        auto pred = [&](std::uint64_t n) {
            try {
                for (std::size_t k = 0; k < members.size(); ++k) {
                    const double head =
                        tail_criterion ? head_by_index(members[k], p, w, n, budget)
                                       : seminorm_pth(members[k], p, w, n);
                    if (!(norm_hi[k] - head < eps))
                        return false;
                }
                return true;
            } catch (const UnknownTerm&) {
                unknown_terms = true;
                return false;
            }
        };
        const auto found = least_true(pred, budget);
        if (!found) {
            if (unknown_terms)
                throw BudgetExhausted(
                    "tabled member runs out of exact terms before the gap closes");
            throw BudgetExhausted("uniform gap did not close within the budget");
        }
        return *found;
    }
    case FamilySpec::Kind::ShiftFamily: {
        const Interval nb = lorentz_norm_pth(A.base(), p, w, tol, budget);
        if (nb.hi < eps)
            return std::uint64_t{0};
        // A shift past any candidate N leaves the whole support in the tail.
        return NotEquinormed{
            {"shift of the base past N: seminorm 0, full norm in the gap",
             nb.lo}};
    }
    case FamilySpec::Kind::ScaledBasis:
        return scaled_basis_index(A.coeffs(), p, eps, budget);
    case FamilySpec::Kind::Dominated: {
        // sup over the order interval of both the seminorm gap and the
        // norm tail is T_N(g), attained by the member that keeps only the
        // tail of the dominating sequence.
        const auto& g = A.dominating();
        const auto found = least_true(
            [&](std::uint64_t n) {
                return tail_norm_pth(g, p, w, n, tol, budget).hi < eps;
            },
            budget);
        if (!found)
            throw BudgetExhausted("dominated tail norm did not drop below eps");
        return *found;
    }
    }
    throw SpecError("unreachable");
}

std::string verdict_note(const FamilyBound& b) {
    if (std::holds_alternative<Unbounded>(b))
        return "family is unbounded";
    return {};
}

} // namespace

// ---------------------------------------------------------------------------
// FamilySpec

FamilySpec::FamilySpec(Kind kind, std::vector<SequenceSpec> members,
                       std::optional<SequenceSpec> single,
                       std::vector<SequenceSpec> samples)
    : kind_(kind), members_(std::move(members)), single_(std::move(single)),
      samples_(std::move(samples)) {}

FamilySpec FamilySpec::explicit_finite(std::vector<SequenceSpec> members) {
    return FamilySpec(Kind::ExplicitFinite, std::move(members), std::nullopt, {});
}

FamilySpec FamilySpec::shift_family(SequenceSpec base) {
    if (base.kind() != SequenceSpec::Kind::Finite)
        throw SpecError("ShiftFamily base must be a Finite sequence");
    return FamilySpec(Kind::ShiftFamily, {}, std::move(base), {});
}

FamilySpec FamilySpec::scaled_basis(SequenceSpec coeffs) {
    return FamilySpec(Kind::ScaledBasis, {}, std::move(coeffs), {});
}

FamilySpec FamilySpec::dominated(SequenceSpec envelope,
                                 std::vector<SequenceSpec> samples) {
    constexpr std::uint64_t kCheckHorizon = 1000;
    for (const auto& s : samples)
        for (std::uint64_t i = 1; i <= kCheckHorizon; ++i)
            if (s.abs_bound_at(i) > envelope.abs_bound_at(i) * (1 + 1e-12))
                throw SpecError("sample violates the pointwise domination bound");
    return FamilySpec(Kind::Dominated, {}, std::move(envelope),
                      std::move(samples));
}

const SequenceSpec& FamilySpec::base() const {
    if (kind_ != Kind::ShiftFamily)
        throw UnsupportedVariant("family has no shift base");
    return *single_;
}

const SequenceSpec& FamilySpec::coeffs() const {
    if (kind_ != Kind::ScaledBasis)
        throw UnsupportedVariant("family has no coefficient stream");
    return *single_;
}

const SequenceSpec& FamilySpec::dominating() const {
    if (kind_ != Kind::Dominated)
        throw UnsupportedVariant("family has no dominating sequence");
    return *single_;
}

// ---------------------------------------------------------------------------
// Operations

FamilyBound family_bound(const FamilySpec& A, double p, const WeightSpec& w,
                         double tol, std::uint64_t budget) {
    switch (A.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
        Interval m = Interval::point(0.0);
        for (const auto& member : A.members()) {
            const Interval n = lorentz_norm_pth(member, p, w, tol, budget);
            m.lo = std::max(m.lo, n.lo);
            m.hi = std::max(m.hi, n.hi);
        }
        return m;
    }
    case FamilySpec::Kind::ShiftFamily:
        // Shifting preserves the multiset of values, hence the norm.
        return lorentz_norm_pth(A.base(), p, w, tol, budget);
    case FamilySpec::Kind::ScaledBasis: {
        const AbsSup s = seq_abs_sup(A.coeffs());
        if (!std::isfinite(s.hi))
            return Unbounded{};
        // ||c_n e_n||^p = |c_n|^p * w_1 and w_1 = 1.
        return Interval{std::pow(s.lo, p), std::pow(s.hi, p)};
    }
    case FamilySpec::Kind::Dominated:
        return lorentz_norm_pth(A.dominating(), p, w, tol, budget);
    }
    throw SpecError("unreachable");
}

EquinormResult min_equinorm_index(const FamilySpec& A, double p,
                                  const WeightSpec& w, double eps,
                                  std::uint64_t budget) {
    return uniform_index(A, p, w, eps, budget, /*tail_criterion=*/false);
}

EquinormResult tail_criterion_index(const FamilySpec& A, double p,
                                    const WeightSpec& w, double eps,
                                    std::uint64_t budget) {
    return uniform_index(A, p, w, eps, budget, /*tail_criterion=*/true);
}

std::uint64_t lambda_of(double M, double d, double p, const WeightSpec& w) {
    if (!(d > 0.0))
        throw SpecError("d must be positive");
    if (!(M >= 0.0))
        throw SpecError("M must be nonnegative");
    const double dp = std::pow(d, p);
    double sum = 0.0, comp = 0.0;
    std::uint64_t n = 0;
    constexpr std::uint64_t kCap = 100'000'000;
    while (n < kCap) {
        const double y = w.at(n + 1) - comp;
        const double t = sum + y;
        if (dp * t > M)
            return n;
        comp = (t - sum) - y;
        sum = t;
        ++n;
    }
    throw BudgetExhausted("lambda search exceeded the iteration cap");
}

GammaResult gamma_of(const FamilySpec& A, double d) {
    if (!(d > 0.0))
        throw SpecError("threshold d must be positive");
    switch (A.kind()) {
    case FamilySpec::Kind::ExplicitFinite: {
        std::uint64_t n = 1;
        for (const auto& m : A.members()) {
            const auto r = seq_vanishing_index(m, d);
            if (std::holds_alternative<Infinite>(r))
                return Infinite{};
            n = std::max(n, std::get<std::uint64_t>(r));
        }
        return n;
    }
    case FamilySpec::Kind::ShiftFamily: {
        const AbsSup s = seq_abs_sup(A.base());
        // A value >= d reappears at arbitrarily late positions.
        if (s.lo >= d)
            return Infinite{};
        return std::uint64_t{1};
    }
    case FamilySpec::Kind::ScaledBasis:
        // Member n contributes only |c_n| at position n.
        return seq_vanishing_index(A.coeffs(), d);
    case FamilySpec::Kind::Dominated:
        return seq_vanishing_index(A.dominating(), d);
    }
    throw SpecError("unreachable");
}

double gamma_inverse_at(const FamilySpec& A, std::uint64_t n, double tol) {
    if (n == 0)
        throw SpecError("index must be >= 1");
    // Pointwise family bound at n; the bisection threshold function.
    auto bound_at = [&](std::uint64_t i) -> double {
        switch (A.kind()) {
        case FamilySpec::Kind::ExplicitFinite: {
            double m = 0.0;
            for (const auto& member : A.members())
                m = std::max(m, member.abs_bound_at(i));
            return m;
        }
        case FamilySpec::Kind::ShiftFamily: {
            // Shift k places b_j at position j + k; position i sees b_1..b_i.
            double m = 0.0;
            const auto& e = A.base().entries();
            for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(i, e.size()); ++j)
                m = std::max(m, std::abs(e[j - 1]));
            return m;
        }
        case FamilySpec::Kind::ScaledBasis:
            return A.coeffs().abs_bound_at(i);
        case FamilySpec::Kind::Dominated:
            return A.dominating().abs_bound_at(i);
        }
        throw SpecError("unreachable");
    };

    const double v = bound_at(n);
    if (v == 0.0)
        return 0.0;
    // The majorant only exists for uniformly vanishing families.
    if (std::holds_alternative<Infinite>(gamma_of(A, v / 2)))
        throw NotUniform("family does not vanish uniformly; no majorant exists");

    double lo = 0.0, hi = 2 * v;
    while (hi - lo > tol * std::max(1.0, v)) {
        const double mid = 0.5 * (lo + hi);
        (bound_at(n) >= mid ? lo : hi) = mid;
    }
    return lo;
}

FamilySpec difference_family(const FamilySpec& A) {
    if (A.kind() != FamilySpec::Kind::ExplicitFinite)
        throw UnsupportedVariant("difference family needs an explicit member list");
    for (const auto& m : A.members())
        if (m.kind() != SequenceSpec::Kind::Finite)
            throw UnsupportedVariant("difference family needs Finite members");

    std::vector<SequenceSpec> diffs;
    const auto& ms = A.members();
    diffs.reserve(ms.size() * ms.size());
    for (const auto& a : ms) {
        for (const auto& b : ms) {
            const std::size_t len = std::max(a.entries().size(), b.entries().size());
            std::vector<double> d(len, 0.0);
            for (std::size_t k = 0; k < len; ++k) {
                const double av = k < a.entries().size() ? a.entries()[k] : 0.0;
                const double bv = k < b.entries().size() ? b.entries()[k] : 0.0;
                d[k] = av - bv;
            }
            diffs.push_back(SequenceSpec::finite(std::move(d)));
        }
    }
    return FamilySpec::explicit_finite(std::move(diffs));
}

Certificate certify(const FamilySpec& A, double p, const WeightSpec& w,
                    const std::vector<double>& eps_ladder, double tol,
                    std::uint64_t budget) {
    Certificate cert;
    cert.method = CriterionMethod::Both;

    FamilyBound fb;
    try {
        fb = family_bound(A, p, w, tol, budget);
    } catch (const Error& e) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = std::string("family bound unavailable: ") + e.what();
        return cert;
    }
    if (std::holds_alternative<Unbounded>(fb)) {
        cert.verdict = Verdict::NotPrecompact;
        cert.witness = EquinormWitness{verdict_note(fb), kInf};
        return cert;
    }
    cert.bound = std::get<Interval>(fb);

    bool inconclusive = false;
    for (double eps : eps_ladder) {
        std::optional<EquinormResult> gap, tail;
        try {
            gap = min_equinorm_index(A, p, w, eps, budget);
        } catch (const BudgetExhausted&) {
        }
        try {
            tail = tail_criterion_index(A, p, w, eps, budget);
        } catch (const BudgetExhausted&) {
        }
        if (!gap || !tail) {
            inconclusive = true;
            cert.note = "budget exhausted before the criteria could decide";
            if (!gap && !tail)
                continue;
        }
        if (gap && tail &&
            std::holds_alternative<std::uint64_t>(*gap) !=
                std::holds_alternative<std::uint64_t>(*tail))
            cert.cross_check_agreement = false;
        if (gap) {
            if (const auto* ne = std::get_if<NotEquinormed>(&*gap)) {
                cert.verdict = Verdict::NotPrecompact;
                cert.witness = ne->witness;
                return cert;
            }
            cert.equinorm_table.emplace_back(eps, std::get<std::uint64_t>(*gap));
        } else if (tail) {
            if (const auto* ne = std::get_if<NotEquinormed>(&*tail)) {
                cert.verdict = Verdict::NotPrecompact;
                cert.witness = ne->witness;
                return cert;
            }
        }
    }
    cert.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Precompact;
    return cert;
}

} // namespace lorentz
