#ifndef LORENTZ_SEQUENCES_HPP
#define LORENTZ_SEQUENCES_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace lorentz {

/// Nonincreasing upper bound env(i) on |a_i| past a cutoff, with closed-form
/// certified bounds on its p-th power tail sums. Enables certified
/// truncation of the infinite sums behind every norm quantity.
class Envelope {
public:
    enum class Kind { PowerTail, GeometricTail };

    /// env(i) = c * i^(-s), c >= 0, s > 0.
    static Envelope power_tail(double c, double s);
    /// env(i) = c * r^i, c >= 0, r in (0, 1).
    static Envelope geometric_tail(double c, double r);

    Kind kind() const { return kind_; }
    double coeff() const { return c_; }
    /// Decay parameter: s for PowerTail, r for GeometricTail.
    double param() const { return param_; }

    double at(std::uint64_t i) const;

    /// Whether sum_{i>k} env(i)^p converges for some (any) k.
    bool tail_sum_pth_converges(double p) const;

    /// Upper bound on sum_{i>k} env(i)^p (integral test / geometric series);
    /// +inf when divergent. Requires k >= 1.
    double tail_sum_pth_upper(double p, std::uint64_t k) const;

private:
    Envelope(Kind kind, double c, double param);

    Kind kind_;
    double c_;
    double param_;
};

/// A real sequence in one of four analyzable shapes:
///   - Finite(entries):          a_i = entries[i-1], 0 beyond
///   - Power(c, s):              a_i = c * i^(-s)
///   - Geometric(c, r):          a_i = c * r^i, |r| < 1
///   - Tabled(entries, env):     exact values up to a cutoff, |a_i| <= env(i)
///                               beyond it
///
/// Power admits any real s so that unbounded coefficient streams (s <= 0)
/// are expressible for family constructions; such sequences are classified
/// as non-members wherever a norm is requested.
///
/// Immutable after construction; all accessors are pure and thread-safe.
class SequenceSpec {
public:
    enum class Kind { Finite, Power, Geometric, Tabled };

    static SequenceSpec finite(std::vector<double> entries);
    static SequenceSpec power(double c, double s);
    static SequenceSpec geometric(double c, double r);
    static SequenceSpec tabled(std::vector<double> entries, Envelope env);

    Kind kind() const { return kind_; }

    /// a_i for i >= 1. Throws UnknownTerm for a Tabled sequence beyond its
    /// cutoff: there the variant only bounds |a_i|.
    double term_at(std::uint64_t i) const;

    /// Certified upper bound on |a_i|; total (never throws on valid specs).
    double abs_bound_at(std::uint64_t i) const;

    /// Upper bound on sup_{i > h} |a_i|; +inf when the tail is unbounded.
    double tail_abs_sup(std::uint64_t h) const;

    /// Last index with an exactly known value (Finite length, Tabled
    /// cutoff); nullopt when every term is exact (Power, Geometric).
    std::optional<std::uint64_t> exact_horizon() const;

    bool is_identically_zero() const;

    const std::vector<double>& entries() const { return entries_; }
    double coeff() const { return c_; }
    /// s for Power, r for Geometric.
    double param() const { return param_; }
    const Envelope& envelope() const;

private:
    SequenceSpec(Kind kind, std::vector<double> entries, double c, double param,
                 std::optional<Envelope> env);

    Kind kind_;
    std::vector<double> entries_;
    double c_ = 0.0;
    double param_ = 0.0;
    std::optional<Envelope> env_;
};

} // namespace lorentz

#endif
