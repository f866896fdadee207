#include "lorentz/sequences.hpp"

#include <cmath>
#include <limits>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// Envelope

Envelope::Envelope(Kind kind, double c, double param)
    : kind_(kind), c_(c), param_(param) {}

Envelope Envelope::power_tail(double c, double s) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw SpecError("PowerTail envelope requires c >= 0");
    if (!(s > 0.0))
        throw SpecError("PowerTail envelope requires s > 0");
    return Envelope(Kind::PowerTail, c, s);
}

Envelope Envelope::geometric_tail(double c, double r) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw SpecError("GeometricTail envelope requires c >= 0");
    if (!(r > 0.0) || !(r < 1.0))
        throw SpecError("GeometricTail envelope requires r in (0, 1)");
    return Envelope(Kind::GeometricTail, c, r);
}

double Envelope::at(std::uint64_t i) const {
    if (i == 0)
        throw SpecError("envelope index must be >= 1");
    const double x = static_cast<double>(i);
    return kind_ == Kind::PowerTail ? c_ * std::pow(x, -param_)
                                    : c_ * std::pow(param_, x);
}

bool Envelope::tail_sum_pth_converges(double p) const {
    if (c_ == 0.0)
        return true;
    return kind_ == Kind::GeometricTail || param_ * p > 1.0;
}

double Envelope::tail_sum_pth_upper(double p, std::uint64_t k) const {
    if (c_ == 0.0)
        return 0.0;
    const double cp = std::pow(c_, p);
    if (kind_ == Kind::GeometricTail) {
        const double q = std::pow(param_, p);
        return cp * std::pow(q, static_cast<double>(k + 1)) / (1.0 - q);
    }
    const double e = param_ * p; // exponent of i^(-e)
    if (e <= 1.0)
        return kInf;
    // Integral test: sum_{i>k} i^(-e) <= k^(1-e) / (e-1), k >= 1.
    if (k == 0)
        return cp * (1.0 + 1.0 / (e - 1.0));
    return cp * std::pow(static_cast<double>(k), 1.0 - e) / (e - 1.0);
}

// ---------------------------------------------------------------------------
// SequenceSpec

SequenceSpec::SequenceSpec(Kind kind, std::vector<double> entries, double c,
                           double param, std::optional<Envelope> env)
    : kind_(kind), entries_(std::move(entries)), c_(c), param_(param),
      env_(std::move(env)) {}

SequenceSpec SequenceSpec::finite(std::vector<double> entries) {
    for (double v : entries)
        if (!std::isfinite(v))
            throw SpecError("Finite sequence entries must be finite reals");
    return SequenceSpec(Kind::Finite, std::move(entries), 0.0, 0.0, std::nullopt);
}

SequenceSpec SequenceSpec::power(double c, double s) {
    if (!std::isfinite(c) || !std::isfinite(s))
        throw SpecError("Power sequence parameters must be finite");
    return SequenceSpec(Kind::Power, {}, c, s, std::nullopt);
}

SequenceSpec SequenceSpec::geometric(double c, double r) {
    if (!std::isfinite(c) || !(std::abs(r) < 1.0))
        throw SpecError("Geometric sequence requires finite c and |r| < 1");
    return SequenceSpec(Kind::Geometric, {}, c, r, std::nullopt);
}

SequenceSpec SequenceSpec::tabled(std::vector<double> entries, Envelope env) {
    for (double v : entries)
        if (!std::isfinite(v))
            throw SpecError("Tabled sequence entries must be finite reals");
    return SequenceSpec(Kind::Tabled, std::move(entries), 0.0, 0.0,
                        std::move(env));
}

const Envelope& SequenceSpec::envelope() const {
    if (!env_)
        throw UnsupportedVariant("sequence has no envelope");
    return *env_;
}

double SequenceSpec::term_at(std::uint64_t i) const {
    if (i == 0)
        throw SpecError("sequence index must be >= 1");
    switch (kind_) {
    case Kind::Finite:
        return i <= entries_.size() ? entries_[i - 1] : 0.0;
    case Kind::Power:
        return c_ == 0.0 ? 0.0 : c_ * std::pow(static_cast<double>(i), -param_);
    case Kind::Geometric:
        return c_ * std::pow(param_, static_cast<double>(i));
    case Kind::Tabled:
        if (i <= entries_.size())
            return entries_[i - 1];
        throw UnknownTerm("tabled sequence only bounds |a_i| beyond its cutoff");
    }
    throw SpecError("unreachable");
}

double SequenceSpec::abs_bound_at(std::uint64_t i) const {
    if (kind_ == Kind::Tabled && i > entries_.size())
        return env_->at(i);
    return std::abs(term_at(i));
}

double SequenceSpec::tail_abs_sup(std::uint64_t h) const {
    switch (kind_) {
    case Kind::Finite:
        if (h >= entries_.size())
            return 0.0;
        {
            double m = 0.0;
            for (std::uint64_t i = h + 1; i <= entries_.size(); ++i)
                m = std::max(m, std::abs(entries_[i - 1]));
            return m;
        }
    case Kind::Power:
        if (c_ == 0.0)
            return 0.0;
        if (param_ <= 0.0)
            return param_ == 0.0 ? std::abs(c_) : kInf;
        return std::abs(c_) * std::pow(static_cast<double>(h + 1), -param_);
    case Kind::Geometric:
        return std::abs(c_) * std::pow(std::abs(param_), static_cast<double>(h + 1));
    case Kind::Tabled: {
        double m = env_->at(std::max<std::uint64_t>(h, entries_.size()) + 1);
        for (std::uint64_t i = h + 1; i <= entries_.size(); ++i)
            m = std::max(m, std::abs(entries_[i - 1]));
        return m;
    }
    }
    throw SpecError("unreachable");
}

std::optional<std::uint64_t> SequenceSpec::exact_horizon() const {
    switch (kind_) {
    case Kind::Finite:
    case Kind::Tabled:
        return entries_.size();
    default:
        return std::nullopt;
    }
}

bool SequenceSpec::is_identically_zero() const {
    switch (kind_) {
    case Kind::Finite:
        for (double v : entries_)
            if (v != 0.0)
                return false;
        return true;
    case Kind::Power:
    case Kind::Geometric:
        return c_ == 0.0;
    case Kind::Tabled:
        for (double v : entries_)
            if (v != 0.0)
                return false;
        return env_->coeff() == 0.0;
    }
    throw SpecError("unreachable");
}

} // namespace lorentz
