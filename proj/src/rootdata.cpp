#include "qclaw/rootdata.hpp"

#include <algorithm>
#include <set>

namespace qclaw {

CartanDatum::CartanDatum(IntMat matrix) : a_(std::move(matrix)) {
    const size_t n = a_.size();
    if (n == 0) throw ParseError("empty Cartan matrix");
    for (size_t i = 0; i < n; ++i) {
        if (a_[i].size() != n) throw ParseError("Cartan matrix is not square");
        if (a_[i][i] != 2) throw ParseError("Cartan diagonal entry != 2");
        for (size_t j = 0; j < n; ++j) {
            if (a_[i][j] != a_[j][i]) throw ParseError("Cartan matrix is not symmetric");
            if (i != j && a_[i][j] > 0) throw ParseError("positive off-diagonal Cartan entry");
        }
    }
}

CartanDatum CartanDatum::named(const std::string& type) {
    if (type.size() < 2) throw ParseError("unknown Cartan type '" + type + "'");
    const char family = type[0];
    Int n = 0;
    try {
        n = std::stoll(type.substr(1));
    } catch (...) {
        throw ParseError("unknown Cartan type '" + type + "'");
    }
    auto zero = [&](Int m) { return IntMat(static_cast<size_t>(m), IntVec(static_cast<size_t>(m), 0)); };
    auto link = [](IntMat& a, Int i, Int j) {
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
        a[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
    };
    IntMat a;
    if (family == 'A' && n >= 1) {
        a = zero(n);
        for (Int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        for (Int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
    } else if (family == 'D' && n >= 4) {
        a = zero(n);
        for (Int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        for (Int i = 0; i + 1 < n - 1; ++i) link(a, i, i + 1);
        link(a, n - 3, n - 1);
    } else if (family == 'E' && n >= 6 && n <= 8) {
        // Bourbaki numbering: node 2 hangs off node 4 of the A-chain 1-3-4-5-6(-7-8).
        a = zero(n);
        for (Int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        link(a, 0, 2);
        for (Int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
        link(a, 1, 3);
    } else {
        throw ParseError("unknown Cartan type '" + type + "'");
    }
    return CartanDatum(std::move(a));
}

MixedWeight MixedWeight::from_root(const CartanDatum& cd, const RootVec& r) {
    return MixedWeight(IntVec(static_cast<size_t>(cd.rank()), 0), r.coords);
}

MixedWeight MixedWeight::from_weight(const CartanDatum& cd, const WeightVec& w) {
    return MixedWeight(w.coords, IntVec(static_cast<size_t>(cd.rank()), 0));
}

MixedWeight MixedWeight::fundamental(const CartanDatum& cd, Int i) {
    IntVec om(static_cast<size_t>(cd.rank()), 0);
    om[static_cast<size_t>(i)] = 1;
    return MixedWeight(std::move(om), IntVec(static_cast<size_t>(cd.rank()), 0));
}

MixedWeight MixedWeight::simple_root(const CartanDatum& cd, Int i) {
    IntVec al(static_cast<size_t>(cd.rank()), 0);
    al[static_cast<size_t>(i)] = 1;
    return MixedWeight(IntVec(static_cast<size_t>(cd.rank()), 0), std::move(al));
}

bool MixedWeight::is_in_root_lattice() const {
    return std::all_of(omega_.begin(), omega_.end(), [](Int c) { return c == 0; });
}

RootVec MixedWeight::to_root() const {
    if (!is_in_root_lattice())
        throw MixedWeightPairError("value has a nonzero varpi-part, not a root vector");
    return RootVec{alpha_};
}

WeightVec MixedWeight::to_weight(const CartanDatum& cd) const {
    IntVec out = omega_;
    const Int n = cd.rank();
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j)
            out[static_cast<size_t>(i)] += cd.entry(i, j) * alpha_[static_cast<size_t>(j)];
    return WeightVec{std::move(out)};
}

MixedWeight MixedWeight::operator+(const MixedWeight& o) const {
    IntVec om = omega_, al = alpha_;
    for (size_t i = 0; i < om.size(); ++i) om[i] += o.omega_[i];
    for (size_t i = 0; i < al.size(); ++i) al[i] += o.alpha_[i];
    return MixedWeight(std::move(om), std::move(al));
}

MixedWeight MixedWeight::operator-(const MixedWeight& o) const {
    IntVec om = omega_, al = alpha_;
    for (size_t i = 0; i < om.size(); ++i) om[i] -= o.omega_[i];
    for (size_t i = 0; i < al.size(); ++i) al[i] -= o.alpha_[i];
    return MixedWeight(std::move(om), std::move(al));
}

MixedWeight MixedWeight::operator-() const {
    IntVec om = omega_, al = alpha_;
    for (auto& c : om) c = -c;
    for (auto& c : al) c = -c;
    return MixedWeight(std::move(om), std::move(al));
}

Int coroot_pairing(const CartanDatum& cd, Int i, const MixedWeight& w) {
    // <h_i, varpi_j> = delta_ij, <h_i, alpha_j> = a_ij
    Int v = w.omega_part()[static_cast<size_t>(i)];
    for (Int j = 0; j < cd.rank(); ++j)
        v += cd.entry(i, j) * w.alpha_part()[static_cast<size_t>(j)];
    return v;
}

MixedWeight reflect(const CartanDatum& cd, Int i, const MixedWeight& w) {
    const Int c = coroot_pairing(cd, i, w);
    IntVec al = w.alpha_part();
    al[static_cast<size_t>(i)] -= c;
    return MixedWeight(w.omega_part(), std::move(al));
}

RootVec reflect(const CartanDatum& cd, Int i, const RootVec& r) {
    return reflect(cd, i, MixedWeight::from_root(cd, r)).to_root();
}

WeightVec reflect(const CartanDatum& cd, Int i, const WeightVec& w) {
    return reflect(cd, i, MixedWeight::from_weight(cd, w)).to_weight(cd);
}

MixedWeight weyl_apply(const CartanDatum& cd, const ReducedWord& word, const MixedWeight& w) {
    MixedWeight out = w;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        out = reflect(cd, *it, out);
    return out;
}

RootVec weyl_apply(const CartanDatum& cd, const ReducedWord& word, const RootVec& r) {
    return weyl_apply(cd, word, MixedWeight::from_root(cd, r)).to_root();
}

WeightVec weyl_apply(const CartanDatum& cd, const ReducedWord& word, const WeightVec& w) {
    return weyl_apply(cd, word, MixedWeight::from_weight(cd, w)).to_weight(cd);
}

std::vector<RootVec> beta_sequence(const CartanDatum& cd, const ReducedWord& word) {
    const Int l = word.length();
    for (Int k = 0; k < l; ++k) {
        const Int i = word.letters[static_cast<size_t>(k)];
        if (i < 0 || i >= cd.rank()) throw ParseError("word letter out of range");
    }
    std::vector<RootVec> betas;
    std::set<IntVec> seen;
    for (Int k = 0; k < l; ++k) {
        ReducedWord prefix{IntVec(word.letters.begin(), word.letters.begin() + k)};
        MixedWeight b = weyl_apply(cd, prefix,
                                   MixedWeight::simple_root(cd, word.letters[static_cast<size_t>(k)]));
        RootVec root = b.to_root();
        const bool positive =
            std::all_of(root.coords.begin(), root.coords.end(), [](Int c) { return c >= 0; }) &&
            std::any_of(root.coords.begin(), root.coords.end(), [](Int c) { return c > 0; });
        if (!positive)
            throw NotReducedError("beta_" + std::to_string(k + 1) + " is not a positive root");
        if (!seen.insert(root.coords).second)
            throw NotReducedError("beta_" + std::to_string(k + 1) + " repeats an earlier root");
        betas.push_back(std::move(root));
    }
    return betas;
}

Int bilinear(const CartanDatum& cd, const MixedWeight& x, const MixedWeight& y) {
    const MixedWeight* root = nullptr;
    const MixedWeight* other = nullptr;
    if (x.is_in_root_lattice()) {
        root = &x;
        other = &y;
    } else if (y.is_in_root_lattice()) {
        root = &y;
        other = &x;
    } else {
        throw MixedWeightPairError("form requested on two general weights");
    }
    const Int n = cd.rank();
    Int v = 0;
    for (Int i = 0; i < n; ++i) {
        const Int xi = root->alpha_part()[static_cast<size_t>(i)];
        if (xi == 0) continue;
        v += xi * other->omega_part()[static_cast<size_t>(i)];
        for (Int j = 0; j < n; ++j)
            v += xi * cd.entry(i, j) * other->alpha_part()[static_cast<size_t>(j)];
    }
    return v;
}

Int bilinear(const CartanDatum& cd, const RootVec& x, const RootVec& y) {
    return bilinear(cd, MixedWeight::from_root(cd, x), MixedWeight::from_root(cd, y));
}

Int bilinear(const CartanDatum& cd, const RootVec& x, const WeightVec& y) {
    return bilinear(cd, MixedWeight::from_root(cd, x), MixedWeight::from_weight(cd, y));
}

RootVec weight_of_var(const CartanDatum& cd, const ReducedWord& word, Int k) {
    const Int i = word.letters[static_cast<size_t>(k)];
    ReducedWord prefix{IntVec(word.letters.begin(), word.letters.begin() + k + 1)};
    MixedWeight om = MixedWeight::fundamental(cd, i);
    MixedWeight d = weyl_apply(cd, prefix, om) - om;
    return d.to_root();
}

} // namespace qclaw
