#ifndef LORENTZ_COMPACTNESS_HPP
#define LORENTZ_COMPACTNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lorentz/norms.hpp"

namespace lorentz {

/// A family of sequences in one of four structured shapes:
///   - ExplicitFinite: a finite list of members
///   - ShiftFamily:    {sigma^n(base) : n >= 0}, sigma^n prepends n zeros;
///                     base must be Finite
///   - ScaledBasis:    {c_n * e_n : n >= 1} for a coefficient stream c
///   - Dominated:      the order interval {a : |a_i| <= g_i for all i},
///                     optionally with explicit sample members
///
/// Arbitrary infinite sets are not representable: certified verdicts need
/// analyzable structure.
class FamilySpec {
public:
    enum class Kind { ExplicitFinite, ShiftFamily, ScaledBasis, Dominated };

    static FamilySpec explicit_finite(std::vector<SequenceSpec> members);
    static FamilySpec shift_family(SequenceSpec base);
    static FamilySpec scaled_basis(SequenceSpec coeffs);
    static FamilySpec dominated(SequenceSpec envelope,
                                std::vector<SequenceSpec> samples = {});

    Kind kind() const { return kind_; }
    const std::vector<SequenceSpec>& members() const { return members_; }
    const SequenceSpec& base() const;
    const SequenceSpec& coeffs() const;
    const SequenceSpec& dominating() const;
    const std::vector<SequenceSpec>& samples() const { return samples_; }

private:
    FamilySpec(Kind kind, std::vector<SequenceSpec> members,
               std::optional<SequenceSpec> single,
               std::vector<SequenceSpec> samples);

    Kind kind_;
    std::vector<SequenceSpec> members_;
    std::optional<SequenceSpec> single_; // base / coeffs / envelope
    std::vector<SequenceSpec> samples_;
};

struct Unbounded {};
using FamilyBound = std::variant<Interval, Unbounded>;

/// Counterexample witness for a failed uniform criterion.
struct EquinormWitness {
    std::string member; // description of the violating member(s)
    double gap = 0.0;   // the uniform gap that cannot drop below eps
};
struct NotEquinormed {
    EquinormWitness witness;
};
using EquinormResult = std::variant<std::uint64_t, NotEquinormed>;

enum class Verdict { Precompact, NotPrecompact, Inconclusive };
enum class CriterionMethod { SeminormGap, TailCriterion, Both };

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Interval> bound;                       // M, when finite
    std::vector<std::pair<double, std::uint64_t>> equinorm_table; // (eps, N)
    std::optional<EquinormWitness> witness;
    CriterionMethod method = CriterionMethod::Both;
    bool cross_check_agreement = true;
    std::string note;
};

/// Certified upper bound on sup_{a in A} ||a||_{p,w}^p, or Unbounded.
FamilyBound family_bound(const FamilySpec& A, double p, const WeightSpec& w,
                         double tol = kDefaultTol,
                         std::uint64_t budget = kDefaultBudget);

/// Least N with sup_{a in A} (||a||^p - S_N(a)) < eps, or a witness that no
/// such N exists. Throws BudgetExhausted when undecidable within budget.
EquinormResult min_equinorm_index(const FamilySpec& A, double p,
                                  const WeightSpec& w, double eps,
                                  std::uint64_t budget = kDefaultBudget);

/// Least N with sup_{a in A} H_tilde_N(a) < eps (the tail-of-the-norm
/// criterion), or a witness. Equivalent to equinormedness for bounded
/// families.
EquinormResult tail_criterion_index(const FamilySpec& A, double p,
                                    const WeightSpec& w, double eps,
                                    std::uint64_t budget = kDefaultBudget);

/// Largest n with d^p * sum_{i<=n} w_i <= M: a uniform cap on the number of
/// entries with |a_i| >= d across any family bounded by M.
std::uint64_t lambda_of(double M, double d, double p, const WeightSpec& w);

struct Infinite {};
using GammaResult = std::variant<std::uint64_t, Infinite>;

/// Minimal N with |a_n| < d for all n >= N and all members, or Infinite when
/// the family does not vanish uniformly.
GammaResult gamma_of(const FamilySpec& A, double d);

/// Majorant value at index n: sup over members of |a_n|, located by monotone
/// bisection on d. Throws NotUniform when gamma_of is Infinite.
double gamma_inverse_at(const FamilySpec& A, std::uint64_t n,
                        double tol = 1e-12);

/// All pairwise differences a - b of an ExplicitFinite family of Finite
/// members (both orders, including the zero differences a - a).
FamilySpec difference_family(const FamilySpec& A);

inline const std::vector<double> kDefaultEpsLadder = {1e-1, 1e-2, 1e-3};

/// Precompactness certification via the bounded-plus-equinormed criterion,
/// cross-checked against the tail-of-the-norm criterion.
Certificate certify(const FamilySpec& A, double p, const WeightSpec& w,
                    const std::vector<double>& eps_ladder = kDefaultEpsLadder,
                    double tol = kDefaultTol,
                    std::uint64_t budget = kDefaultBudget);

} // namespace lorentz

#endif
