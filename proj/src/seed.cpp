#include "qclaw/seed.hpp"

#include <algorithm>

namespace qclaw {

QuantumSeed::QuantumSeed(LambdaMatrix l, IntMat btilde, IntVec exchangeable,
                         std::vector<RootVec> weights, std::vector<TorusElement> expansions,
                         LambdaMatrix l_init, std::vector<std::string> labels,
                         std::optional<CartanDatum> cartan, std::optional<ReducedWord> word)
    : L_(std::move(l)),
      Btilde_(std::move(btilde)),
      exchangeable_(std::move(exchangeable)),
      weights_(std::move(weights)),
      expansions_(std::move(expansions)),
      L_init_(std::move(l_init)),
      labels_(std::move(labels)),
      cartan_(std::move(cartan)),
      word_(std::move(word)) {
    certify();
}

bool QuantumSeed::is_exchangeable(Int k) const {
    return std::binary_search(exchangeable_.begin(), exchangeable_.end(), k);
}

Int QuantumSeed::column_of(Int k) const {
    auto it = std::lower_bound(exchangeable_.begin(), exchangeable_.end(), k);
    if (it == exchangeable_.end() || *it != k)
        throw FrozenIndexError("index " + std::to_string(k + 1) + " is not exchangeable");
    return static_cast<Int>(it - exchangeable_.begin());
}

bool QuantumSeed::equals(const QuantumSeed& o) const {
    return L_ == o.L_ && Btilde_ == o.Btilde_ && exchangeable_ == o.exchangeable_ &&
           weights_ == o.weights_ && expansions_ == o.expansions_ && L_init_ == o.L_init_;
}

void QuantumSeed::certify() const {
    const Int l = L_.size();
    const Int nex = exchangeable_count();
    if (static_cast<Int>(Btilde_.size()) != l || weights_.size() != static_cast<size_t>(l) ||
        expansions_.size() != static_cast<size_t>(l) || labels_.size() != static_cast<size_t>(l))
        throw ParseError("seed component sizes disagree");
    for (const auto& row : Btilde_)
        if (static_cast<Int>(row.size()) != nex) throw ParseError("Btilde has a short row");
    for (Int t = 0; t < nex; ++t) {
        const Int k = exchangeable_[static_cast<size_t>(t)];
        if (k < 0 || k >= l) throw ParseError("exchangeable index out of range");
    }
    // principal part skew-symmetric
    for (Int s = 0; s < nex; ++s)
        for (Int t = 0; t < nex; ++t) {
            const Int i = exchangeable_[static_cast<size_t>(s)];
            const Int j = exchangeable_[static_cast<size_t>(t)];
            if (Btilde_[static_cast<size_t>(i)][static_cast<size_t>(t)] !=
                -Btilde_[static_cast<size_t>(j)][static_cast<size_t>(s)])
                throw ConventionMismatchError("principal part of Btilde is not skew-symmetric");
        }
    // compatibility: sum_s L_{is} b_{st} = 2 delta_{i, ex[t]}
    for (Int i = 0; i < l; ++i) {
        for (Int t = 0; t < nex; ++t) {
            Int acc = 0;
            for (Int s = 0; s < l; ++s)
                acc += L_.at(i, s) * Btilde_[static_cast<size_t>(s)][static_cast<size_t>(t)];
            const Int want = (i == exchangeable_[static_cast<size_t>(t)]) ? 2 : 0;
            if (acc != want)
                throw ConventionMismatchError("compatibility L*Btilde = 2[I;0] fails at (" +
                                              std::to_string(i + 1) + "," + std::to_string(t + 1) +
                                              ")");
        }
    }
    // weight relation: sum_j weights[j] * b_{jt} = 0
    if (l > 0) {
        const size_t rank = weights_[0].coords.size();
        for (Int t = 0; t < nex; ++t) {
            IntVec acc(rank, 0);
            for (Int j = 0; j < l; ++j)
                for (size_t r = 0; r < rank; ++r)
                    acc[r] += weights_[static_cast<size_t>(j)].coords[r] *
                              Btilde_[static_cast<size_t>(j)][static_cast<size_t>(t)];
            if (!std::all_of(acc.begin(), acc.end(), [](Int c) { return c == 0; }))
                throw ConventionMismatchError("weight relation D*Btilde = 0 fails in column " +
                                              std::to_string(t + 1));
        }
    }
}

TorusElement QuantumSeed::normalized_monomial(const ExpVec& c) const {
    IntVec order(static_cast<size_t>(size()));
    for (Int i = 0; i < size(); ++i) order[static_cast<size_t>(i)] = i;
    return normalized_monomial_in_order(c, order);
}

TorusElement QuantumSeed::normalized_monomial_in_order(const ExpVec& c,
                                                       const IntVec& order) const {
    const Int l = size();
    if (static_cast<Int>(c.size()) != l) throw ParseError("exponent vector has wrong length");
    for (Int k : exchangeable_)
        if (c[static_cast<size_t>(k)] < 0)
            throw NegativeExchangeableExponentError("exponent " +
                                                    std::to_string(c[static_cast<size_t>(k)]) +
                                                    " at exchangeable index " + std::to_string(k + 1));
    // X^c = q^{-1/2 sum_{u<u'} c_{o_u} c_{o_u'} L_{o_u o_u'}} prod_{u} x_{o_u}^{c_{o_u}},
    // the inverse of the unit produced by reassembling the ordered product.
    Int pref = 0;
    for (size_t u = 0; u < order.size(); ++u)
        for (size_t v = u + 1; v < order.size(); ++v)
            pref -= c[static_cast<size_t>(order[u])] * c[static_cast<size_t>(order[v])] *
                    L_.at(order[u], order[v]);
    TorusElement res = TorusElement::monomial(ExpVec(static_cast<size_t>(l), 0), QInt::vpow(pref));
    for (Int o : order) {
        const Int e = c[static_cast<size_t>(o)];
        if (e == 0) continue;
        const TorusElement& x = expansions_[static_cast<size_t>(o)];
        if (e > 0) {
            for (Int t = 0; t < e; ++t) res = mul(L_init_, res, x);
        } else {
            const TorusElement inv = x.unit_monomial_inverse();
            for (Int t = 0; t < -e; ++t) res = mul(L_init_, res, inv);
        }
    }
    return res;
}

Int QuantumSeed::lambda_pair(const ExpVec& a, const ExpVec& b) const {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s -= a[i] * b[j] * L_.at(static_cast<Int>(i), static_cast<Int>(j));
    }
    return s;
}

RootVec QuantumSeed::monomial_weight(const ExpVec& b) const {
    const size_t rank = weights_.empty() ? 0 : weights_[0].coords.size();
    IntVec mu(rank, 0);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t r = 0; r < rank; ++r) mu[r] += b[i] * weights_[i].coords[r];
    return RootVec{std::move(mu)};
}

Int QuantumSeed::lambda_tilde_x2(const ExpVec& a, const ExpVec& b) const {
    if (!cartan_) throw Error("seed carries no Cartan datum; lambda_tilde unavailable");
    return lambda_pair(a, b) + bilinear(*cartan_, monomial_weight(a), monomial_weight(b));
}

Int QuantumSeed::weighted_normalization_vpow(const ExpVec& b) const {
    if (!cartan_) throw Error("seed carries no Cartan datum; normalization unavailable");
    const RootVec mu = monomial_weight(b);
    const Int norm = bilinear(*cartan_, mu, mu);
    // (mu, mu) is even on the root lattice, so -(mu,mu)/2 is the integer
    // v-exponent of q^{-(mu,mu)/4}.
    if (norm % 2 != 0) throw ConventionMismatchError("odd self-pairing on the root lattice");
    return -norm / 2;
}

IntMat QuantumSeed::mutate_btilde(const IntMat& btilde, const IntVec& exchangeable, Int k) {
    auto it = std::lower_bound(exchangeable.begin(), exchangeable.end(), k);
    if (it == exchangeable.end() || *it != k)
        throw FrozenIndexError("mutation direction " + std::to_string(k + 1) + " is frozen");
    const Int kc = static_cast<Int>(it - exchangeable.begin());
    const Int l = static_cast<Int>(btilde.size());
    const Int nex = static_cast<Int>(exchangeable.size());
    IntMat nb(static_cast<size_t>(l), IntVec(static_cast<size_t>(nex), 0));
    for (Int i = 0; i < l; ++i) {
        for (Int t = 0; t < nex; ++t) {
            const Int j = exchangeable[static_cast<size_t>(t)];
            const Int bij = btilde[static_cast<size_t>(i)][static_cast<size_t>(t)];
            if (i == k || j == k) {
                nb[static_cast<size_t>(i)][static_cast<size_t>(t)] = -bij;
            } else {
                const Int bik = btilde[static_cast<size_t>(i)][static_cast<size_t>(kc)];
                const Int bkj = btilde[static_cast<size_t>(k)][static_cast<size_t>(t)];
                const Int sgn = bik < 0 ? -1 : 1;
                nb[static_cast<size_t>(i)][static_cast<size_t>(t)] =
                    bij + sgn * std::max(bik * bkj, static_cast<Int>(0));
            }
        }
    }
    return nb;
}

LambdaMatrix QuantumSeed::mutate_lambda(const LambdaMatrix& L, const IntMat& btilde,
                                        const IntVec& exchangeable, Int k) {
    auto it = std::lower_bound(exchangeable.begin(), exchangeable.end(), k);
    if (it == exchangeable.end() || *it != k)
        throw FrozenIndexError("mutation direction " + std::to_string(k + 1) + " is frozen");
    const Int kc = static_cast<Int>(it - exchangeable.begin());
    const Int l = L.size();
    IntVec neg(static_cast<size_t>(l), 0); // max(0, -b_{tk})
    for (Int t = 0; t < l; ++t)
        neg[static_cast<size_t>(t)] =
            std::max(-btilde[static_cast<size_t>(t)][static_cast<size_t>(kc)],
                     static_cast<Int>(0));
    IntMat nl(static_cast<size_t>(l), IntVec(static_cast<size_t>(l), 0));
    for (Int i = 0; i < l; ++i) {
        for (Int j = 0; j < l; ++j) {
            if (i == j) continue;
            if (i == k) {
                Int v = -L.at(k, j);
                for (Int t = 0; t < l; ++t) v += neg[static_cast<size_t>(t)] * L.at(t, j);
                nl[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            } else if (j == k) {
                Int v = -L.at(i, k);
                for (Int t = 0; t < l; ++t) v += neg[static_cast<size_t>(t)] * L.at(i, t);
                nl[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            } else {
                nl[static_cast<size_t>(i)][static_cast<size_t>(j)] = L.at(i, j);
            }
        }
    }
    return LambdaMatrix(std::move(nl));
}

namespace {

std::string mutated_label(const std::string& old, Int k) {
    const std::string wrap = "mu" + std::to_string(k + 1) + "(";
    if (old.starts_with(wrap) && old.ends_with(")"))
        return old.substr(wrap.size(), old.size() - wrap.size() - 1);
    return wrap + old + ")";
}

} // namespace

QuantumSeed QuantumSeed::mutate(Int k) const {
    const Int kc = column_of(k);
    const Int l = size();

    // Exponents of the two exchange monomials: a' collects max(0, b_{ik}),
    // a'' collects max(0, -b_{ik}), both with -1 at k.
    ExpVec ap(static_cast<size_t>(l), 0), app(static_cast<size_t>(l), 0);
    for (Int i = 0; i < l; ++i) {
        const Int b = Btilde_[static_cast<size_t>(i)][static_cast<size_t>(kc)];
        ap[static_cast<size_t>(i)] = std::max(b, static_cast<Int>(0));
        app[static_cast<size_t>(i)] = std::max(-b, static_cast<Int>(0));
    }
    ap[static_cast<size_t>(k)] = -1;
    app[static_cast<size_t>(k)] = -1;

    // x_k x_k' = q^{s'} x^{a' + e_k} + q^{s''} x^{a'' + e_k}, with s', s''
    // the units from left-multiplying x^{a'}, x^{a''} by x^{e_k} under L.
    const ExpVec ek = unit_exp(l, k);
    Int sp = 0, spp = 0;
    for (Int j = 0; j < l; ++j) {
        sp += L_.at(k, j) * ap[static_cast<size_t>(j)];
        spp += L_.at(k, j) * app[static_cast<size_t>(j)];
    }
    const TorusElement rhs =
        normalized_monomial(expvec_add(ap, ek)).scale(QInt::vpow(sp)) +
        normalized_monomial(expvec_add(app, ek)).scale(QInt::vpow(spp));

    const TorusElement& xk = expansions_[static_cast<size_t>(k)];
    TorusElement new_x;
    try {
        new_x = divide_left_exact(L_init_, rhs, xk);
    } catch (const NotDivisibleError& e) {
        throw LaurentFailureError(std::string("exchange division failed at direction ") +
                                  std::to_string(k + 1) + ": " + e.what());
    }
    if (!(mul(L_init_, xk, new_x) == rhs))
        throw LaurentFailureError("exchange identity recheck failed");

    // wt(M_k') = -wt(M_k) + sum_{b_{ik} > 0} b_{ik} wt(M_i)
    const size_t rank = weights_.empty() ? 0 : weights_[0].coords.size();
    IntVec wk(rank, 0);
    for (size_t r = 0; r < rank; ++r) wk[r] = -weights_[static_cast<size_t>(k)].coords[r];
    for (Int i = 0; i < l; ++i) {
        const Int b = Btilde_[static_cast<size_t>(i)][static_cast<size_t>(kc)];
        if (b > 0)
            for (size_t r = 0; r < rank; ++r)
                wk[r] += b * weights_[static_cast<size_t>(i)].coords[r];
    }

    LambdaMatrix nl = mutate_lambda(L_, Btilde_, exchangeable_, k);
    IntMat nb = mutate_btilde(Btilde_, exchangeable_, k);
    std::vector<RootVec> nwts = weights_;
    nwts[static_cast<size_t>(k)] = RootVec{std::move(wk)};
    std::vector<TorusElement> nexps = expansions_;
    nexps[static_cast<size_t>(k)] = new_x;
    std::vector<std::string> nlabels = labels_;
    nlabels[static_cast<size_t>(k)] = mutated_label(labels_[static_cast<size_t>(k)], k);

    QuantumSeed out(std::move(nl), std::move(nb), exchangeable_, std::move(nwts),
                    std::move(nexps), L_init_, std::move(nlabels), cartan_, word_);

    // The mutated commutation matrix must be realized by the expansions:
    // x_i x_k' = q^{L'_{ik}} x_k' x_i in the initial torus.
    for (Int i = 0; i < l; ++i) {
        if (i == k) continue;
        const TorusElement lhs = mul(L_init_, out.expansions_[static_cast<size_t>(i)], new_x);
        const TorusElement rhs2 =
            mul(L_init_, new_x, out.expansions_[static_cast<size_t>(i)])
                .scale(QInt::vpow(2 * out.L_.at(i, k)));
        if (!(lhs == rhs2))
            throw ConventionMismatchError("q-commutation of the mutated variable fails against index " +
                                          std::to_string(i + 1));
    }
    return out;
}

QuantumSeed QuantumSeed::rebased() const {
    const Int l = size();
    std::vector<TorusElement> units;
    units.reserve(static_cast<size_t>(l));
    for (Int i = 0; i < l; ++i) units.push_back(TorusElement::monomial(unit_exp(l, i)));
    return QuantumSeed(L_, Btilde_, exchangeable_, weights_, std::move(units), L_, labels_,
                       cartan_, word_);
}

} // namespace qclaw
