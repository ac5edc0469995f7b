#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclaw/qtorus.hpp"
#include "qclaw/rootdata.hpp"

namespace qclaw {

/**
 * A quantum seed: the commutation matrix L, the exchange matrix Btilde,
 * per-variable weights, and for each variable its Laurent expansion in the
 * torus of the ambient initial seed (whose commutation matrix is l_init).
 *
 * Invariants, certified on construction and after every mutation:
 *  - L skew-symmetric, principal part of Btilde skew-symmetric,
 *  - compatibility sum_s L_{is} b_{st} = 2 delta_{i,t},
 *  - sum_j weights[j] * Btilde_{j,t} = 0,
 *  - the expansions q-commute per L inside the initial torus.
 *
 * Seeds are immutable values; mutate() returns a fresh seed.
 */
class QuantumSeed {
public:
    QuantumSeed(LambdaMatrix l, IntMat btilde, IntVec exchangeable,
                std::vector<RootVec> weights, std::vector<TorusElement> expansions,
                LambdaMatrix l_init, std::vector<std::string> labels,
                std::optional<CartanDatum> cartan = std::nullopt,
                std::optional<ReducedWord> word = std::nullopt);

    Int size() const { return L_.size(); }
    Int exchangeable_count() const { return static_cast<Int>(exchangeable_.size()); }
    const LambdaMatrix& L() const { return L_; }
    const LambdaMatrix& L_init() const { return L_init_; }
    /// l x (#exchangeable) matrix; column t belongs to exchangeable()[t].
    const IntMat& Btilde() const { return Btilde_; }
    /// Sorted global indices of the exchangeable variables (0-based).
    const IntVec& exchangeable() const { return exchangeable_; }
    bool is_exchangeable(Int k) const;
    bool is_frozen(Int k) const { return !is_exchangeable(k); }
    /// Column slot of global index k in Btilde; throws FrozenIndexError.
    Int column_of(Int k) const;

    const std::vector<RootVec>& weights() const { return weights_; }
    const std::vector<TorusElement>& expansions() const { return expansions_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<CartanDatum>& cartan() const { return cartan_; }
    const std::optional<ReducedWord>& word() const { return word_; }

    /// Mathematical equality: matrices, split, weights and expansions
    /// coincide exactly. Labels and ancillary data are not compared.
    bool equals(const QuantumSeed& o) const;

    /// Mutation in direction k (0-based global index, must be exchangeable).
    /// The new variable is obtained by one exact left division in the
    /// initial torus; throws LaurentFailureError if the division fails.
    QuantumSeed mutate(Int k) const;

    /// The seed with the same matrices, weights and labels but unit-monomial
    /// expansions: this seed regarded as the initial seed of its own torus.
    QuantumSeed rebased() const;

    /// Normalized cluster monomial x^c of this seed, expanded in the initial
    /// torus. Exchangeable exponents must be nonnegative; frozen variables
    /// may be inverted (their expansions are unit monomials in every seed).
    TorusElement normalized_monomial(const ExpVec& c) const;

    /// Same, with the ordered product taken along an arbitrary permutation
    /// of the index set. The result does not depend on the permutation.
    TorusElement normalized_monomial_in_order(const ExpVec& c, const IntVec& order) const;

    /// Lambda(M(a), M(b)) = -sum a_i b_j L_ij.
    Int lambda_pair(const ExpVec& a, const ExpVec& b) const;

    /// 2 * LambdaTilde(M(a), M(b)) = lambda_pair(a,b) + (wt(a), wt(b)).
    /// Requires the seed to carry its Cartan datum.
    Int lambda_tilde_x2(const ExpVec& a, const ExpVec& b) const;

    /// v-exponent of the weight normalization q^{-(mu_b, mu_b)/4}.
    Int weighted_normalization_vpow(const ExpVec& b) const;

    /// Weight of the cluster monomial x^b.
    RootVec monomial_weight(const ExpVec& b) const;

    /// Mutated exchange matrix alone (k a 0-based exchangeable index).
    static IntMat mutate_btilde(const IntMat& btilde, const IntVec& exchangeable, Int k);
    /// Mutated commutation matrix alone.
    static LambdaMatrix mutate_lambda(const LambdaMatrix& L, const IntMat& btilde,
                                      const IntVec& exchangeable, Int k);

private:
    void certify() const;

    LambdaMatrix L_;
    IntMat Btilde_;
    IntVec exchangeable_;
    std::vector<RootVec> weights_;
    std::vector<TorusElement> expansions_;
    LambdaMatrix L_init_;
    std::vector<std::string> labels_;
    std::optional<CartanDatum> cartan_;
    std::optional<ReducedWord> word_;
};

} // namespace qclaw
