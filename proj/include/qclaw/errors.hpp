#pragma once

#include <stdexcept>
#include <string>

namespace qclaw {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A word failed the beta-sequence reducedness certificate.
struct NotReducedError : Error {
    explicit NotReducedError(const std::string& msg) : Error("NotReduced: " + msg) {}
};

/// Bilinear form requested on two general weight-lattice arguments.
struct MixedWeightPairError : Error {
    explicit MixedWeightPairError(const std::string& msg) : Error("MixedWeightPair: " + msg) {}
};

/// Exact division has no quotient over the coefficient ring.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& msg) : Error("NotDivisible: " + msg) {}
};

/// A construction-time certification (compatibility, weight relation,
/// q-commutation) did not hold. Signals inconsistent input conventions
/// or an internal bug; never expected on valid data.
struct ConventionMismatchError : Error {
    explicit ConventionMismatchError(const std::string& msg) : Error("ConventionMismatch: " + msg) {}
};

/// The quantum exchange division failed during mutation.
struct LaurentFailureError : Error {
    explicit LaurentFailureError(const std::string& msg) : Error("LaurentFailure: " + msg) {}
};

/// A cluster monomial was requested with a negative exponent at an
/// exchangeable index.
struct NegativeExchangeableExponentError : Error {
    explicit NegativeExchangeableExponentError(const std::string& msg)
        : Error("NegativeExchangeableExponent: " + msg) {}
};

/// Mutation (or another exchangeable-only operation) requested at a frozen index.
struct FrozenIndexError : Error {
    explicit FrozenIndexError(const std::string& msg) : Error("FrozenIndex: " + msg) {}
};

/// No unique dominance-extremal exponent exists in a support.
struct NoUniqueExtremumError : Error {
    explicit NoUniqueExtremumError(const std::string& msg) : Error("NoUniqueExtremum: " + msg) {}
};

/// The stacked matrix of the inversion check is singular.
struct SingularError : Error {
    explicit SingularError(const std::string& msg) : Error("Singular: " + msg) {}
};

/// An exact linear solve produced a non-integer entry.
struct NonIntegralError : Error {
    explicit NonIntegralError(const std::string& msg) : Error("NonIntegral: " + msg) {}
};

/// A variable weight has support outside the letters of the word.
struct SupportLeakError : Error {
    explicit SupportLeakError(const std::string& msg) : Error("SupportLeak: " + msg) {}
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

} // namespace qclaw
