#ifndef LORENTZ_NORMS_HPP
#define LORENTZ_NORMS_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "lorentz/interval.hpp"
#include "lorentz/rearrangement.hpp"
#include "lorentz/sequences.hpp"
#include "lorentz/weights.hpp"

namespace lorentz {

/// Default width target for certified enclosures.
inline constexpr double kDefaultTol = 1e-8;

struct Member {
    Interval norm_pth; // enclosure of ||a||_{p,w}^p
};
struct NotMember {
    std::string reason; // analytic divergence certificate
};
struct Inconclusive {
    double partial_sum = 0.0;
    std::uint64_t horizon = 0;
};
using MembershipVerdict = std::variant<Member, NotMember, Inconclusive>;

inline bool is_member(const MembershipVerdict& v) {
    return std::holds_alternative<Member>(v);
}

/// The eight quantities of the head/tail decomposition at a split index i,
/// each a certified enclosure (exact quantities are point intervals):
///   S       seminorm p-th power of the head projection
///   S_tilde tail renormed with the shifted weights w_{i+1}, w_{i+2}, ...
///   H       head of the norm sum, split by original index
///   H_tilde its complement
///   W       head of the norm sum, split by weight rank
///   W_tilde its complement
///   T       tail renormed with the full weight sequence
struct DecompositionRecord {
    std::uint64_t split = 0;
    Interval S, S_tilde, H, H_tilde, W, W_tilde, T;
    Interval norm_pth;
};

/// Plain p-norm of a finitely supported sequence.
double p_norm(const SequenceSpec& a, double p);

/// Analytic membership classification; total on valid inputs.
MembershipVerdict classify_membership(const SequenceSpec& a, double p,
                                      const WeightSpec& w,
                                      std::uint64_t budget = kDefaultBudget);

/// Enclosure of ||a||_{p,w}^p of width <= tol (a point for Finite inputs).
/// Throws NotSummable for non-members and BudgetExhausted when tol is
/// unreachable within the budget.
Interval lorentz_norm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                          double tol = kDefaultTol,
                          std::uint64_t budget = kDefaultBudget);

/// S_i(a) = ||r_i(a)||_{p,w}^p, exact. i = 0 yields 0.
double seminorm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                    std::uint64_t i);

/// T_i(a) = ||a_{(i+1..)}||_{p,w}^p, the tail renormed with the full weight
/// sequence. i = 0 yields the norm itself.
Interval tail_norm_pth(const SequenceSpec& a, double p, const WeightSpec& w,
                       std::uint64_t i, double tol = kDefaultTol,
                       std::uint64_t budget = kDefaultBudget);

/// Full head/tail decomposition at split index i (i = 0 means "all tail").
DecompositionRecord decompose(const SequenceSpec& a, double p,
                              const WeightSpec& w, std::uint64_t i,
                              double tol = kDefaultTol,
                              std::uint64_t budget = kDefaultBudget);

} // namespace lorentz

#endif
