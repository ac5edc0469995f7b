#include "qclaw/qring.hpp"

#include <sstream>

namespace qclaw {

QInt QInt::integer(const BigInt& n) {
    QInt r;
    if (n != 0) r.terms_[0] = n;
    return r;
}

QInt QInt::vpow(Int e) {
    QInt r;
    r.terms_[e] = 1;
    return r;
}

QInt QInt::term(Int e, const BigInt& coeff) {
    QInt r;
    if (coeff != 0) r.terms_[e] = coeff;
    return r;
}

bool QInt::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

QInt QInt::operator+(const QInt& o) const {
    QInt r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

QInt QInt::operator-(const QInt& o) const { return *this + (-o); }

QInt QInt::operator-() const {
    QInt r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QInt QInt::operator*(const QInt& o) const {
    QInt r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            const Int e = e1 + e2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                BigInt c = c1 * c2;
                if (c != 0) r.terms_.emplace(e, std::move(c));
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

QInt QInt::mul_vpow(Int e) const {
    QInt r;
    for (const auto& [e1, c] : terms_) r.terms_.emplace(e1 + e, c);
    return r;
}

QInt QInt::bar() const {
    QInt r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

QInt QInt::divide_exact(const QInt& o) const {
    if (o.is_zero()) throw Error("division by zero in Z[v^{+-1}]");
    if (is_zero()) return QInt();
    // Shift both onto Z[v]_{>=0}; the quotient picks up the exponent offset back.
    const Int amin = terms_.begin()->first;
    const Int bmin = o.terms_.begin()->first;
    const Int offset = amin - bmin;
    const Int blead = o.terms_.rbegin()->first;
    const BigInt& bleadc = o.terms_.rbegin()->second;

    // Long division from the top. When an exact quotient exists over Z the
    // running remainder is always o times the unprocessed quotient tail, so
    // each leading-coefficient division is exact; any failure certifies
    // non-divisibility.
    std::map<Int, BigInt> rem = terms_;
    QInt q;
    while (!rem.empty()) {
        const Int rlead = rem.rbegin()->first;
        const Int e = rlead - blead;
        if (e < offset) throw NotDivisibleError("remainder degree fell below the quotient range");
        BigInt quot, r;
        boost::multiprecision::divide_qr(rem.rbegin()->second, bleadc, quot, r);
        if (r != 0) throw NotDivisibleError("leading coefficient not divisible");
        q.terms_[e] = quot;
        for (const auto& [be, bc] : o.terms_) {
            const Int ne = be + e;
            auto it = rem.find(ne);
            if (it == rem.end()) {
                BigInt c = -bc * quot;
                if (c != 0) rem.emplace(ne, std::move(c));
            } else {
                it->second -= bc * quot;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return q;
}

bool QInt::is_nonneg() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

BigInt QInt::specialize_q1() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string QInt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second << "*v^" << it->first;
    }
    return os.str();
}

QInt QInt::parse(const std::string& text) {
    QInt out;
    std::string s = text;
    if (s == "0") return out;
    size_t pos = 0;
    auto fail = [&]() { throw ParseError("bad coefficient string '" + text + "'"); };
    while (pos < s.size()) {
        size_t star = s.find("*v^", pos);
        if (star == std::string::npos) fail();
        size_t term_end = s.find(" + ", star);
        const std::string coeff_str = s.substr(pos, star - pos);
        const std::string exp_str = s.substr(
            star + 3, (term_end == std::string::npos ? s.size() : term_end) - (star + 3));
        try {
            BigInt c(coeff_str);
            Int e = std::stoll(exp_str);
            if (c == 0) fail();
            if (!out.terms_.emplace(e, c).second) fail();
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail();
        }
        pos = (term_end == std::string::npos) ? s.size() : term_end + 3;
    }
    return out;
}

} // namespace qclaw
