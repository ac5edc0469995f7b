#include "qclaw/analysis.hpp"

#include <algorithm>
#include <map>

namespace qclaw {

bool dominance_leq(const QuantumSeed& seed, const GVec& b, const GVec& b_prime) {
    const Int l = seed.size();
    ExpVec d = expvec_sub(b, b_prime);
    const IntVec& ex = seed.exchangeable();
    IntVec v(ex.size(), 0);
    for (size_t t = 0; t < ex.size(); ++t) {
        Int s = 0;
        for (Int j = 0; j < l; ++j) s += seed.L().at(ex[t], j) * d[static_cast<size_t>(j)];
        if (s % 2 != 0 || s < 0) return false;
        v[t] = s / 2;
    }
    for (Int i = 0; i < l; ++i) {
        Int s = 0;
        for (size_t t = 0; t < ex.size(); ++t)
            s += seed.Btilde()[static_cast<size_t>(i)][t] * v[t];
        if (s != d[static_cast<size_t>(i)]) return false;
    }
    return true;
}

namespace {

GVec exp_extreme(const QuantumSeed& seed, const TorusElement& f, bool maximal) {
    if (f.is_zero()) throw Error("extremal exponent of the zero element");
    std::vector<const ExpVec*> support;
    for (const auto& [a, c] : f.terms()) support.push_back(&a);
    const ExpVec* found = nullptr;
    for (const ExpVec* cand : support) {
        bool ok = true;
        for (const ExpVec* other : support) {
            if (other == cand) continue;
            const bool dominates = maximal ? dominance_leq(seed, *cand, *other)
                                           : dominance_leq(seed, *other, *cand);
            if (!dominates) { ok = false; break; }
        }
        if (ok) {
            if (found) throw NoUniqueExtremumError("two extremal exponents in one support");
            found = cand;
        }
    }
    if (!found)
        throw NoUniqueExtremumError(std::string("no dominance-") + (maximal ? "maximal" : "minimal") +
                                    " exponent in a support of size " +
                                    std::to_string(support.size()));
    return *found;
}

} // namespace

GVec exp_max(const QuantumSeed& seed, const TorusElement& f) { return exp_extreme(seed, f, true); }
GVec exp_min(const QuantumSeed& seed, const TorusElement& f) { return exp_extreme(seed, f, false); }

Int btilde_extended(const QuantumSeed& seed, Int k, Int i) {
    if (seed.is_exchangeable(i))
        return seed.Btilde()[static_cast<size_t>(k)][static_cast<size_t>(seed.column_of(i))];
    return -seed.Btilde()[static_cast<size_t>(i)][static_cast<size_t>(seed.column_of(k))];
}

namespace {

GVec tropical_map(const QuantumSeed& seed, Int k, const GVec& g, bool right) {
    const Int l = seed.size();
    const Int kc = seed.column_of(k);
    const Int gk = g[static_cast<size_t>(k)];
    GVec out = g;
    out[static_cast<size_t>(k)] = -gk;
    for (Int i = 0; i < l; ++i) {
        if (i == k) continue;
        const Int bki = btilde_extended(seed, k, i);
        const Int bik = seed.Btilde()[static_cast<size_t>(i)][static_cast<size_t>(kc)];
        Int coef;
        if (gk >= 0)
            coef = std::max(right ? bki : bik, static_cast<Int>(0));
        else
            coef = std::max(right ? bik : bki, static_cast<Int>(0));
        out[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] + coef * gk;
    }
    return out;
}

} // namespace

GVec tropical_R(const QuantumSeed& seed, Int k, const GVec& g) {
    return tropical_map(seed, k, g, true);
}

GVec tropical_L(const QuantumSeed& seed, Int k, const GVec& g) {
    return tropical_map(seed, k, g, false);
}

bool transport_check(const QuantumSeed& seed, Int k, const TorusElement& f_here,
                     const QuantumSeed& mutated, const TorusElement& f_there) {
    const GVec gmax = exp_max(seed, f_here);
    const GVec gmin = exp_min(seed, f_here);
    return tropical_R(seed, k, gmax) == exp_max(mutated, f_there) &&
           tropical_L(seed, k, gmin) == exp_min(mutated, f_there);
}

GVec pbw_gvector(const ReducedWord& word, const IntVec& c) {
    const Int l = word.length();
    GVec g(static_cast<size_t>(l), 0);
    for (Int k = 0; k < l; ++k) {
        const Int kp = kplus(word, k);
        g[static_cast<size_t>(k)] =
            c[static_cast<size_t>(k)] - (kp < l ? c[static_cast<size_t>(kp)] : 0);
    }
    return g;
}

PbwPreimage pbw_from_gvector(const ReducedWord& word, const GVec& a) {
    const Int l = word.length();
    // occurrence chains per letter, in positional order
    std::map<Int, IntVec> chains;
    for (Int k = 0; k < l; ++k) chains[word.letters[static_cast<size_t>(k)]].push_back(k);

    IntVec a_prime = a;
    for (const auto& [letter, chain] : chains) {
        // P_j = sum of the exchangeable entries from position j to the end
        // of the chain; the frozen tail entry is raised to make every
        // telescoped sum nonnegative, and no further.
        Int run = 0, min_run = 0;
        for (size_t j = chain.size() - 1; j-- > 0;) {
            run += a[static_cast<size_t>(chain[j])];
            min_run = std::min(min_run, run);
        }
        a_prime[static_cast<size_t>(chain.back())] = -min_run;
    }

    IntVec c(static_cast<size_t>(l), 0);
    for (const auto& [letter, chain] : chains) {
        Int acc = 0;
        for (size_t j = chain.size(); j-- > 0;) {
            acc += a_prime[static_cast<size_t>(chain[j])];
            c[static_cast<size_t>(chain[j])] = acc;
        }
    }
    IntVec shift(static_cast<size_t>(l), 0);
    for (Int k = 0; k < l; ++k)
        shift[static_cast<size_t>(k)] = a[static_cast<size_t>(k)] - a_prime[static_cast<size_t>(k)];
    return PbwPreimage{std::move(c), std::move(shift)};
}

IntVec denominator_vector(const QuantumSeed& seed, const TorusElement& f) {
    if (f.is_zero()) throw Error("denominator vector of the zero element");
    IntVec d(static_cast<size_t>(seed.size()), 0);
    for (Int k : seed.exchangeable()) {
        Int mn = f.terms().begin()->first[static_cast<size_t>(k)];
        for (const auto& [a, c] : f.terms()) mn = std::min(mn, a[static_cast<size_t>(k)]);
        d[static_cast<size_t>(k)] = -mn;
    }
    return d;
}

bool bar_invariant_coefficients(const TorusElement& f) {
    for (const auto& [a, c] : f.terms())
        if (!(c.bar() == c)) return false;
    return true;
}

// ---------------------------------------------------------------------
// classical engine
// ---------------------------------------------------------------------

ClassicalSeed ClassicalSeed::initial(Int size, IntMat btilde, IntVec exchangeable) {
    std::vector<ClassicalPoly> exps;
    for (Int i = 0; i < size; ++i) {
        IntVec e(static_cast<size_t>(size), 0);
        e[static_cast<size_t>(i)] = 1;
        exps.push_back(ClassicalPoly{{std::move(e), BigInt(1)}});
    }
    return ClassicalSeed{std::move(btilde), std::move(exchangeable), std::move(exps)};
}

ClassicalPoly classical_mul(const ClassicalPoly& f, const ClassicalPoly& g) {
    ClassicalPoly r;
    for (const auto& [m1, c1] : f) {
        for (const auto& [m2, c2] : g) {
            IntVec m = m1;
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            auto it = r.find(m);
            if (it == r.end()) {
                BigInt c = c1 * c2;
                if (c != 0) r.emplace(std::move(m), std::move(c));
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

ClassicalPoly classical_div(const ClassicalPoly& f, const ClassicalPoly& g) {
    if (g.empty()) throw Error("classical division by zero");
    if (f.empty()) return {};
    const size_t n = f.begin()->first.size();
    IntVec flo = f.begin()->first, glo = g.begin()->first;
    for (const auto& [m, c] : f)
        for (size_t i = 0; i < n; ++i) flo[i] = std::min(flo[i], m[i]);
    for (const auto& [m, c] : g)
        for (size_t i = 0; i < n; ++i) glo[i] = std::min(glo[i], m[i]);

    const IntVec& glead = g.rbegin()->first;
    const BigInt& gleadc = g.rbegin()->second;
    ClassicalPoly rem = f, h;
    while (!rem.empty()) {
        const IntVec& rlead = rem.rbegin()->first;
        IntVec c(n);
        for (size_t i = 0; i < n; ++i) {
            c[i] = rlead[i] - glead[i];
            if (c[i] < flo[i] - glo[i])
                throw LaurentFailureError("classical quotient left the support box");
        }
        BigInt q, r0;
        boost::multiprecision::divide_qr(rem.rbegin()->second, gleadc, q, r0);
        if (r0 != 0) throw LaurentFailureError("classical leading coefficient not divisible");
        h[c] += q;
        for (const auto& [m, gc] : g) {
            IntVec mm = m;
            for (size_t i = 0; i < n; ++i) mm[i] += c[i];
            auto it = rem.find(mm);
            if (it == rem.end()) {
                BigInt cc = -gc * q;
                if (cc != 0) rem.emplace(std::move(mm), std::move(cc));
            } else {
                it->second -= gc * q;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return h;
}

ClassicalSeed classical_oracle_mutate(const ClassicalSeed& seed, Int k) {
    auto it = std::find(seed.exchangeable.begin(), seed.exchangeable.end(), k);
    if (it == seed.exchangeable.end())
        throw FrozenIndexError("classical mutation at a frozen index");
    const size_t kc = static_cast<size_t>(it - seed.exchangeable.begin());
    const size_t l = seed.expansions.size();

    IntVec zero(l, 0);
    ClassicalPoly p1{{zero, BigInt(1)}}, p2{{zero, BigInt(1)}};
    for (size_t i = 0; i < l; ++i) {
        const Int b = seed.btilde[i][kc];
        for (Int t = 0; t < b; ++t) p1 = classical_mul(p1, seed.expansions[i]);
        for (Int t = 0; t < -b; ++t) p2 = classical_mul(p2, seed.expansions[i]);
    }
    ClassicalPoly num = p1;
    for (const auto& [m, c] : p2) {
        num[m] += c;
        if (num[m] == 0) num.erase(m);
    }
    ClassicalPoly newx = classical_div(num, seed.expansions[static_cast<size_t>(k)]);

    // own copy of the matrix mutation rule
    const size_t nex = seed.exchangeable.size();
    IntMat nb(l, IntVec(nex, 0));
    for (size_t i = 0; i < l; ++i) {
        for (size_t t = 0; t < nex; ++t) {
            const Int j = seed.exchangeable[t];
            if (static_cast<Int>(i) == k || j == k) {
                nb[i][t] = -seed.btilde[i][t];
            } else {
                const Int bik = seed.btilde[i][kc];
                const Int bkj = seed.btilde[static_cast<size_t>(k)][t];
                nb[i][t] = seed.btilde[i][t] +
                           (bik < 0 ? -1 : 1) * std::max(bik * bkj, static_cast<Int>(0));
            }
        }
    }
    std::vector<ClassicalPoly> nexps = seed.expansions;
    nexps[static_cast<size_t>(k)] = std::move(newx);
    return ClassicalSeed{std::move(nb), seed.exchangeable, std::move(nexps)};
}

} // namespace qclaw
