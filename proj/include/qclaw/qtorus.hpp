#pragma once

#include <map>
#include <vector>

#include "qclaw/qring.hpp"

namespace qclaw {

/// Exponent vector over the torus index set, dense.
using ExpVec = IntVec;

ExpVec expvec_add(const ExpVec& a, const ExpVec& b);
ExpVec expvec_sub(const ExpVec& a, const ExpVec& b);
ExpVec expvec_neg(const ExpVec& a);
ExpVec unit_exp(Int size, Int i);

/// Skew-symmetric integer commutation matrix of a based quantum torus.
class LambdaMatrix {
public:
    explicit LambdaMatrix(IntMat entries);

    Int size() const { return static_cast<Int>(m_.size()); }
    Int at(Int i, Int j) const { return m_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const IntMat& entries() const { return m_; }

    bool operator==(const LambdaMatrix&) const = default;

private:
    IntMat m_;
};

/// Element of the based quantum torus with X_i X_j = q^{lambda_ij} X_j X_i,
/// written in the normalized monomial basis {X^a}. The exponent map carries
/// no zero coefficients; std::map's vector ordering is the lexicographic
/// order used by the division algorithm.
class TorusElement {
public:
    TorusElement() = default;

    static TorusElement zero() { return TorusElement(); }
    static TorusElement one(Int size);
    static TorusElement monomial(ExpVec a, QInt coeff = QInt::one());

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, QInt>& terms() const { return terms_; }
    const QInt* coeff(const ExpVec& a) const;

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    bool operator==(const TorusElement&) const = default;

    /// Scale every coefficient by c.
    TorusElement scale(const QInt& c) const;

    void add_term(const ExpVec& a, const QInt& c);

    /// True when the element is a single monomial with coefficient +-v^e.
    bool is_unit_monomial() const;

    /// Inverse of a unit monomial; X^a X^{-a} = X^0 because the product
    /// exponent vanishes by skew-symmetry.
    TorusElement unit_monomial_inverse() const;

    /// Coefficient-wise bar involution; the normalized monomials are fixed.
    TorusElement bar() const;

    /// Coefficient-wise specialization at q = 1, dropping zeros.
    std::map<ExpVec, BigInt> specialize_q1() const;

private:
    std::map<ExpVec, QInt> terms_;
};

/// v-exponent of the unit in X^a X^b = v^{sum_ij a_i b_j lambda_ij} X^{a+b};
/// this is twice the q-exponent of the monomial product rule.
Int monomial_product_vpow(const LambdaMatrix& L, const ExpVec& a, const ExpVec& b);

/// Bilinear extension of the monomial product rule; exact.
TorusElement mul(const LambdaMatrix& L, const TorusElement& f, const TorusElement& g);

/**
 * Exact left quotient: returns h with mul(L, g, h) = f.
 *
 * Repeatedly cancels the lex-leading term of the remainder against the
 * lex-leading term of g; the quotient term is forced at every step, so the
 * procedure finds the quotient whenever one exists. Candidate quotient
 * exponents are confined to the componentwise box
 *   [min(f) - min(g), max(f) - max(g)]
 * (per-coordinate top and bottom degrees are additive in a domain), and
 * they strictly decrease in lex order, so the loop terminates. Leaving the
 * box or a failed coefficient division certifies non-divisibility.
 */
TorusElement divide_left_exact(const LambdaMatrix& L, const TorusElement& f,
                               const TorusElement& g);

} // namespace qclaw
