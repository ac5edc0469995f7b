#pragma once

#include <string>
#include <vector>

#include "qclaw/errors.hpp"

namespace qclaw {

using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Symmetric generalized Cartan matrix over a finite index set I = {0,...,n-1}.
class CartanDatum {
public:
    explicit CartanDatum(IntMat matrix);

    /// Named finite types: "A2", "A3", ..., "D4", ..., "E6", "E7", "E8".
    static CartanDatum named(const std::string& type);

    Int rank() const { return static_cast<Int>(a_.size()); }
    Int entry(Int i, Int j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const IntMat& matrix() const { return a_; }

    bool operator==(const CartanDatum& o) const { return a_ == o.a_; }

private:
    IntMat a_;
};

/// Vector in the simple-root basis {alpha_i}.
struct RootVec {
    IntVec coords;
    bool operator==(const RootVec&) const = default;
};

/// Vector in the fundamental-weight basis {varpi_i}.
struct WeightVec {
    IntVec coords;
    bool operator==(const WeightVec&) const = default;
};

/// Element of the weight lattice carried as a pair (varpi-part, alpha-part).
/// The pairing <h_i, -> is integral on both parts, so reflections stay
/// integer-valued with no conversion between bases.
class MixedWeight {
public:
    MixedWeight(IntVec omega, IntVec alpha)
        : omega_(std::move(omega)), alpha_(std::move(alpha)) {}

    static MixedWeight from_root(const CartanDatum& cd, const RootVec& r);
    static MixedWeight from_weight(const CartanDatum& cd, const WeightVec& w);
    static MixedWeight fundamental(const CartanDatum& cd, Int i);
    static MixedWeight simple_root(const CartanDatum& cd, Int i);

    const IntVec& omega_part() const { return omega_; }
    const IntVec& alpha_part() const { return alpha_; }

    bool is_in_root_lattice() const;

    /// Alpha coordinates; requires the varpi-part to vanish.
    RootVec to_root() const;

    /// Folds the alpha-part into varpi coordinates via alpha_j = sum_i a_ij varpi_i.
    WeightVec to_weight(const CartanDatum& cd) const;

    MixedWeight operator+(const MixedWeight& o) const;
    MixedWeight operator-(const MixedWeight& o) const;
    MixedWeight operator-() const;
    bool operator==(const MixedWeight&) const = default;

private:
    IntVec omega_; // coordinates in the varpi basis
    IntVec alpha_; // coordinates in the alpha basis
};

/// Word in the generators, candidate reduced expression. Letters are
/// 0-based indices into I. Reducedness is certified by beta_sequence.
struct ReducedWord {
    IntVec letters;

    Int length() const { return static_cast<Int>(letters.size()); }
    bool operator==(const ReducedWord&) const = default;
};

/// <h_i, lambda>, integral for any mixed weight.
Int coroot_pairing(const CartanDatum& cd, Int i, const MixedWeight& w);

/// Simple reflection r_i(lambda) = lambda - <h_i, lambda> alpha_i.
MixedWeight reflect(const CartanDatum& cd, Int i, const MixedWeight& w);
RootVec reflect(const CartanDatum& cd, Int i, const RootVec& r);
WeightVec reflect(const CartanDatum& cd, Int i, const WeightVec& w);

/// w(lambda) for w = s_{i_1} ... s_{i_l}: the letters act with the last one
/// applied first.
MixedWeight weyl_apply(const CartanDatum& cd, const ReducedWord& word, const MixedWeight& w);
RootVec weyl_apply(const CartanDatum& cd, const ReducedWord& word, const RootVec& r);
WeightVec weyl_apply(const CartanDatum& cd, const ReducedWord& word, const WeightVec& w);

/// The roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) for k = 1..l.
/// Throws NotReducedError unless all beta_k are positive and pairwise
/// distinct, which certifies that the word is reduced.
std::vector<RootVec> beta_sequence(const CartanDatum& cd, const ReducedWord& word);

/// Symmetric bilinear form with (alpha_i, alpha_j) = a_ij and
/// (alpha_i, varpi_j) = delta_ij. At least one argument must lie in the
/// root lattice; throws MixedWeightPairError otherwise.
Int bilinear(const CartanDatum& cd, const MixedWeight& x, const MixedWeight& y);
Int bilinear(const CartanDatum& cd, const RootVec& x, const RootVec& y);
Int bilinear(const CartanDatum& cd, const RootVec& x, const WeightVec& y);

/// Weight of the k-th variable (k is 0-based): w_{<=k+1} varpi_{i_{k+1}} - varpi_{i_{k+1}},
/// always in the root lattice.
RootVec weight_of_var(const CartanDatum& cd, const ReducedWord& word, Int k);

} // namespace qclaw
