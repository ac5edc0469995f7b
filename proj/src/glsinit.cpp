#include "qclaw/glsinit.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace qclaw {

Int kplus(const ReducedWord& word, Int k) {
    const Int l = word.length();
    for (Int s = k + 1; s < l; ++s)
        if (word.letters[static_cast<size_t>(s)] == word.letters[static_cast<size_t>(k)]) return s;
    return l;
}

Int kminus(const ReducedWord& word, Int k) {
    for (Int s = k - 1; s >= 0; --s)
        if (word.letters[static_cast<size_t>(s)] == word.letters[static_cast<size_t>(k)]) return s;
    return -1;
}

namespace {

IntVec exchangeable_indices(const ReducedWord& word) {
    IntVec ex;
    for (Int k = 0; k < word.length(); ++k)
        if (kplus(word, k) < word.length()) ex.push_back(k);
    return ex;
}

} // namespace

IntMat initial_exchange_matrix(const CartanDatum& cd, const ReducedWord& word) {
    const Int l = word.length();
    const IntVec ex = exchangeable_indices(word);
    IntMat b(static_cast<size_t>(l), IntVec(ex.size(), 0));
    for (size_t tc = 0; tc < ex.size(); ++tc) {
        const Int t = ex[tc];
        const Int tp = kplus(word, t);
        for (Int s = 0; s < l; ++s) {
            const Int sp = kplus(word, s);
            const Int is = word.letters[static_cast<size_t>(s)];
            const Int it = word.letters[static_cast<size_t>(t)];
            Int v = 0;
            if (s == tp) v = 1;
            else if (t == sp) v = -1;
            else if (t < s && s < tp && tp < sp) v = cd.entry(is, it);
            else if (s < t && t < sp && sp < tp) v = -cd.entry(is, it);
            b[static_cast<size_t>(s)][tc] = v;
        }
    }
    return b;
}

LambdaMatrix initial_lambda(const CartanDatum& cd, const ReducedWord& word) {
    const Int l = word.length();
    std::vector<RootVec> wts;
    for (Int k = 0; k < l; ++k) wts.push_back(weight_of_var(cd, word, k));
    IntMat lam(static_cast<size_t>(l), IntVec(static_cast<size_t>(l), 0));
    for (Int t = 0; t < l; ++t) {
        const Int it = word.letters[static_cast<size_t>(t)];
        ReducedWord prefix{IntVec(word.letters.begin(), word.letters.begin() + t + 1)};
        const MixedWeight om = MixedWeight::fundamental(cd, it);
        const MixedWeight v = weyl_apply(cd, prefix, om) + om;
        for (Int s = 0; s <= t; ++s) {
            const Int val = bilinear(cd, MixedWeight::from_root(cd, wts[static_cast<size_t>(s)]), v);
            lam[static_cast<size_t>(s)][static_cast<size_t>(t)] = val;
            lam[static_cast<size_t>(t)][static_cast<size_t>(s)] = -val;
        }
    }
    for (Int i = 0; i < l; ++i)
        if (lam[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
            throw ConventionMismatchError("Lambda has a nonzero diagonal entry");
    return LambdaMatrix(std::move(lam));
}

IntMat weight_matrix(const CartanDatum& cd, const ReducedWord& word, IntVec* iprime_out) {
    const Int l = word.length();
    std::set<Int> letters(word.letters.begin(), word.letters.end());
    IntVec iprime(letters.begin(), letters.end());
    IntMat d(iprime.size(), IntVec(static_cast<size_t>(l), 0));
    for (Int j = 0; j < l; ++j) {
        const RootVec wt = weight_of_var(cd, word, j);
        for (Int t = 0; t < cd.rank(); ++t) {
            const Int c = wt.coords[static_cast<size_t>(t)];
            if (c == 0) continue;
            auto it = std::lower_bound(iprime.begin(), iprime.end(), t);
            if (it == iprime.end() || *it != t)
                throw SupportLeakError("variable weight touches a letter outside the word");
            d[static_cast<size_t>(it - iprime.begin())][static_cast<size_t>(j)] = c;
        }
    }
    if (iprime_out) *iprime_out = std::move(iprime);
    return d;
}

namespace {

// Minimal exact rational, just enough for one Gaussian elimination.
struct Rat {
    BigInt num = 0, den = 1;

    Rat() = default;
    Rat(BigInt n) : num(std::move(n)) {}
    Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        if (num == 0) { den = 1; return; }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }
    bool is_zero() const { return num == 0; }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
};

} // namespace

IntMat btilde_from_lambda(const IntMat& lambda_prime, const IntMat& d_matrix) {
    const size_t nex = lambda_prime.size();
    const size_t nfr = d_matrix.size();
    const size_t l = nex + nfr;
    if ((nex && lambda_prime[0].size() != l) || (nfr && d_matrix[0].size() != l))
        throw ParseError("stacked matrix is not square");

    // Rank check on D alone: its rows must span Q^{I'}.
    {
        std::vector<std::vector<Rat>> m;
        for (const auto& row : d_matrix) {
            std::vector<Rat> r;
            for (Int x : row) r.emplace_back(BigInt(x));
            m.push_back(std::move(r));
        }
        size_t rank = 0;
        for (size_t col = 0; col < l && rank < nfr; ++col) {
            size_t piv = rank;
            while (piv < nfr && m[piv][col].is_zero()) ++piv;
            if (piv == nfr) continue;
            std::swap(m[rank], m[piv]);
            for (size_t r = 0; r < nfr; ++r) {
                if (r == rank || m[r][col].is_zero()) continue;
                Rat f = m[r][col] / m[rank][col];
                for (size_t c = col; c < l; ++c) m[r][c] = m[r][c] - f * m[rank][c];
            }
            ++rank;
        }
        if (rank != nfr) throw SingularError("rows of D do not span the letter space");
    }

    // Solve [Lambda'; D] B = [-2I; 0] by Gauss-Jordan over exact rationals.
    std::vector<std::vector<Rat>> aug(l, std::vector<Rat>(l + nex));
    for (size_t r = 0; r < nex; ++r) {
        for (size_t c = 0; c < l; ++c) aug[r][c] = Rat(BigInt(lambda_prime[r][c]));
        aug[r][l + r] = Rat(BigInt(-2));
    }
    for (size_t r = 0; r < nfr; ++r)
        for (size_t c = 0; c < l; ++c) aug[nex + r][c] = Rat(BigInt(d_matrix[r][c]));

    for (size_t col = 0; col < l; ++col) {
        size_t piv = col;
        while (piv < l && aug[piv][col].is_zero()) ++piv;
        if (piv == l) throw SingularError("stacked matrix [Lambda'; D] is singular");
        std::swap(aug[col], aug[piv]);
        const Rat pv = aug[col][col];
        for (size_t c = 0; c < l + nex; ++c) aug[col][c] = aug[col][c] / pv;
        for (size_t r = 0; r < l; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            const Rat f = aug[r][col];
            for (size_t c = 0; c < l + nex; ++c) aug[r][c] = aug[r][c] - f * aug[col][c];
        }
    }

    IntMat b(l, IntVec(nex, 0));
    for (size_t r = 0; r < l; ++r) {
        for (size_t c = 0; c < nex; ++c) {
            Rat& x = aug[r][l + c];
            if (x.den != 1) throw NonIntegralError("solved exchange matrix has a fractional entry");
            if (x.num > std::numeric_limits<Int>::max() || x.num < std::numeric_limits<Int>::min())
                throw NonIntegralError("solved exchange matrix entry overflows");
            b[r][c] = static_cast<Int>(x.num);
        }
    }
    return b;
}

InitialSeedData initial_seed(const CartanDatum& cd, const ReducedWord& word) {
    beta_sequence(cd, word); // reducedness certificate
    const Int l = word.length();

    IntVec kp(static_cast<size_t>(l));
    IntVec frozen;
    for (Int k = 0; k < l; ++k) {
        kp[static_cast<size_t>(k)] = kplus(word, k);
        if (kp[static_cast<size_t>(k)] == l) frozen.push_back(k);
    }
    const IntVec ex = exchangeable_indices(word);

    IntMat btilde = initial_exchange_matrix(cd, word);
    LambdaMatrix lambda = initial_lambda(cd, word);
    IntVec iprime;
    IntMat d = weight_matrix(cd, word, &iprime);

    // Certification: Lambda * Btilde = -2[I;0] against the formula-built
    // Btilde, then agreement with the inversion route. Abort on mismatch.
    for (Int i = 0; i < l; ++i) {
        for (size_t tc = 0; tc < ex.size(); ++tc) {
            Int acc = 0;
            for (Int s = 0; s < l; ++s)
                acc += lambda.at(i, s) * btilde[static_cast<size_t>(s)][tc];
            const Int want = (i == ex[tc]) ? -2 : 0;
            if (acc != want)
                throw ConventionMismatchError("Lambda*Btilde certification failed at row " +
                                              std::to_string(i + 1));
        }
    }
    for (size_t r = 0; r < d.size(); ++r) {
        for (size_t tc = 0; tc < ex.size(); ++tc) {
            Int acc = 0;
            for (Int s = 0; s < l; ++s) acc += d[r][static_cast<size_t>(s)] *
                                               btilde[static_cast<size_t>(s)][tc];
            if (acc != 0) throw ConventionMismatchError("D*Btilde = 0 certification failed");
        }
    }
    IntMat lambda_prime;
    for (Int t : ex) lambda_prime.push_back(lambda.entries()[static_cast<size_t>(t)]);
    if (btilde_from_lambda(lambda_prime, d) != btilde)
        throw ConventionMismatchError("formula Btilde disagrees with the [Lambda'; D] inversion");

    std::vector<RootVec> wts;
    std::vector<TorusElement> exps;
    std::vector<std::string> labels;
    for (Int k = 0; k < l; ++k) {
        wts.push_back(weight_of_var(cd, word, k));
        exps.push_back(TorusElement::monomial(unit_exp(l, k)));
        labels.push_back("x" + std::to_string(k + 1));
    }

    IntMat negated = lambda.entries();
    for (auto& row : negated)
        for (auto& x : row) x = -x;
    LambdaMatrix L(std::move(negated));

    QuantumSeed seed(L, std::move(btilde), ex, std::move(wts), std::move(exps), L,
                     std::move(labels), cd, word);
    return InitialSeedData{word, std::move(kp), std::move(frozen), std::move(iprime),
                           std::move(d), std::move(seed)};
}

} // namespace qclaw
