#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qclaw/errors.hpp"
#include "qclaw/rootdata.hpp"

namespace qclaw {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[q^{+-1/2}], stored as an integer Laurent polynomial in v
/// with v^2 = q. Exponents are powers of v, so all half-integer powers of
/// q are integer powers of v and no rational exponent ever appears.
/// Coefficients are arbitrary-precision; the map holds no zero entries.
class QInt {
public:
    QInt() = default;

    static QInt zero() { return QInt(); }
    static QInt one() { return QInt::vpow(0); }
    static QInt integer(const BigInt& n);
    /// v^e, i.e. q^{e/2}.
    static QInt vpow(Int e);
    static QInt term(Int e, const BigInt& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Int, BigInt>& terms() const { return terms_; }

    QInt operator+(const QInt& o) const;
    QInt operator-(const QInt& o) const;
    QInt operator*(const QInt& o) const;
    QInt operator-() const;
    bool operator==(const QInt&) const = default;

    /// Multiply by q^h for h in (1/2)Z, passed as the v-exponent 2h.
    QInt mul_vpow(Int e) const;

    /// The bar involution v -> v^{-1}.
    QInt bar() const;

    /// Exact quotient: returns c with (*this) = o * c over Z[v^{+-1}].
    /// Throws NotDivisibleError when no such c exists, and Error on o = 0.
    QInt divide_exact(const QInt& o) const;

    bool is_nonneg() const;

    /// Value at v = 1 (equivalently q = 1).
    BigInt specialize_q1() const;

    /// Canonical rendering "c*v^e + ..." with exponents strictly descending;
    /// "0" for zero. parse() inverts it exactly.
    std::string to_string() const;
    static QInt parse(const std::string& text);

private:
    std::map<Int, BigInt> terms_; // v-exponent -> nonzero coefficient
};

} // namespace qclaw
