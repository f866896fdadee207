#ifndef LORENTZ_ERRORS_HPP
#define LORENTZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lorentz {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid construction data (violated invariants in a spec object).
class SpecError : public Error {
public:
    using Error::Error;
};

/// The variant only bounds |a_i| and cannot produce the exact value.
class UnknownTerm : public Error {
public:
    using Error::Error;
};

/// The budgeted horizon cannot separate the requested rank from the envelope.
class HorizonExhausted : public Error {
public:
    using Error::Error;
};

/// The series defining the requested quantity diverges (or membership is
/// not established).
class NotSummable : public Error {
public:
    using Error::Error;
};

/// The requested tolerance is unreachable within the term budget.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for this spec variant.
class UnsupportedVariant : public Error {
public:
    using Error::Error;
};

/// Support exceeds the exhaustive-search cap.
class SupportTooLarge : public Error {
public:
    using Error::Error;
};

/// The family does not vanish uniformly, so no majorant exists.
class NotUniform : public Error {
public:
    using Error::Error;
};

} // namespace lorentz

#endif
