#include "qclaw/qtorus.hpp"

#include <algorithm>

namespace qclaw {

ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ExpVec expvec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ExpVec expvec_neg(const ExpVec& a) {
    ExpVec r = a;
    for (auto& c : r) c = -c;
    return r;
}

ExpVec unit_exp(Int size, Int i) {
    ExpVec r(static_cast<size_t>(size), 0);
    r[static_cast<size_t>(i)] = 1;
    return r;
}

LambdaMatrix::LambdaMatrix(IntMat entries) : m_(std::move(entries)) {
    for (size_t i = 0; i < m_.size(); ++i) {
        if (m_[i].size() != m_.size()) throw ParseError("commutation matrix is not square");
        for (size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != -m_[j][i])
                throw ParseError("commutation matrix is not skew-symmetric");
    }
}

TorusElement TorusElement::one(Int size) {
    return monomial(ExpVec(static_cast<size_t>(size), 0));
}

TorusElement TorusElement::monomial(ExpVec a, QInt coeff) {
    TorusElement r;
    if (!coeff.is_zero()) r.terms_.emplace(std::move(a), std::move(coeff));
    return r;
}

const QInt* TorusElement::coeff(const ExpVec& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? nullptr : &it->second;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    TorusElement r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
    TorusElement r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

TorusElement TorusElement::scale(const QInt& c) const {
    TorusElement r;
    if (c.is_zero()) return r;
    for (const auto& [a, c0] : terms_) r.terms_.emplace(a, c0 * c);
    return r;
}

void TorusElement::add_term(const ExpVec& a, const QInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool TorusElement::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const QInt& c = terms_.begin()->second;
    if (c.terms().size() != 1) return false;
    const BigInt& n = c.terms().begin()->second;
    return n == 1 || n == -1;
}

TorusElement TorusElement::unit_monomial_inverse() const {
    if (!is_unit_monomial()) throw Error("inverse requested of a non-unit torus element");
    const auto& [a, c] = *terms_.begin();
    const auto& [e, n] = *c.terms().begin();
    return monomial(expvec_neg(a), QInt::term(-e, n));
}

TorusElement TorusElement::bar() const {
    TorusElement r;
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.bar());
    return r;
}

std::map<ExpVec, BigInt> TorusElement::specialize_q1() const {
    std::map<ExpVec, BigInt> r;
    for (const auto& [a, c] : terms_) {
        BigInt v = c.specialize_q1();
        if (v != 0) r.emplace(a, std::move(v));
    }
    return r;
}

Int monomial_product_vpow(const LambdaMatrix& L, const ExpVec& a, const ExpVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += a[i] * b[j] * L.at(static_cast<Int>(i), static_cast<Int>(j));
    }
    return s;
}

TorusElement mul(const LambdaMatrix& L, const TorusElement& f, const TorusElement& g) {
    TorusElement r;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const Int e = monomial_product_vpow(L, a, b);
            r.add_term(expvec_add(a, b), (ca * cb).mul_vpow(e));
        }
    }
    return r;
}

namespace {

void support_box(const TorusElement& f, ExpVec& lo, ExpVec& hi) {
    const ExpVec& first = f.terms().begin()->first;
    lo = first;
    hi = first;
    for (const auto& [a, c] : f.terms()) {
        for (size_t i = 0; i < a.size(); ++i) {
            lo[i] = std::min(lo[i], a[i]);
            hi[i] = std::max(hi[i], a[i]);
        }
    }
}

} // namespace

TorusElement divide_left_exact(const LambdaMatrix& L, const TorusElement& f,
                               const TorusElement& g) {
    if (g.is_zero()) throw Error("torus division by zero");
    if (f.is_zero()) return TorusElement::zero();

    ExpVec flo, fhi, glo, ghi;
    support_box(f, flo, fhi);
    support_box(g, glo, ghi);
    const ExpVec box_lo = expvec_sub(flo, glo);
    const ExpVec box_hi = expvec_sub(fhi, ghi);

    const ExpVec& g_lead = g.terms().rbegin()->first;
    const QInt& g_lead_c = g.terms().rbegin()->second;

    TorusElement rem = f;
    TorusElement h;
    while (!rem.is_zero()) {
        const ExpVec& r_lead = rem.terms().rbegin()->first;
        const ExpVec c = expvec_sub(r_lead, g_lead);
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] < box_lo[i] || c[i] > box_hi[i])
                throw NotDivisibleError("quotient exponent left the support box");
        // g_lead * (hc X^c) = g_lead_c hc v^{<g_lead, c>} X^{r_lead}
        const Int shift = monomial_product_vpow(L, g_lead, c);
        QInt hc = rem.terms().rbegin()->second.divide_exact(g_lead_c.mul_vpow(shift));
        h.add_term(c, hc);
        rem = rem - mul(L, g, TorusElement::monomial(c, std::move(hc)));
    }
    return h;
}

} // namespace qclaw
