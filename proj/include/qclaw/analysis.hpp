#pragma once

#include <optional>

#include "qclaw/glsinit.hpp"
#include "qclaw/seed.hpp"

namespace qclaw {

/// Exponent vector playing the role of a g-vector (dominance operand).
using GVec = ExpVec;

/// Tests b >=_S b' in the dominance order of the seed: b - b' = Btilde v
/// for some v >= 0 in Z^{Kex}. The candidate v is forced by compatibility,
/// v = (1/2) L'(b - b'); the routine checks integrality, nonnegativity and
/// that Btilde v reproduces the difference.
bool dominance_leq(const QuantumSeed& seed, const GVec& b, const GVec& b_prime);

/// Unique dominance-maximal exponent of the support of f (the seed supplies
/// the order). Throws NoUniqueExtremumError when no support element
/// dominates all others.
GVec exp_max(const QuantumSeed& seed, const TorusElement& f);
/// Unique dominance-minimal exponent, same contract.
GVec exp_min(const QuantumSeed& seed, const TorusElement& f);

/// b_{k,i} with the frozen-column extension b_{ki} := -b_{ik} for frozen i.
Int btilde_extended(const QuantumSeed& seed, Int k, Int i);

/// Piecewise-linear transport of max-exponents across the mutation at k.
GVec tropical_R(const QuantumSeed& seed, Int k, const GVec& g);
/// Companion map transporting min-exponents.
GVec tropical_L(const QuantumSeed& seed, Int k, const GVec& g);

/// Checks that exp_max transports through tropical_R and exp_min through
/// tropical_L across the mutation at k. f_here is the expansion of a
/// cluster monomial in seed's torus, f_there the expansion of the same
/// element in mutated's torus.
bool transport_check(const QuantumSeed& seed, Int k, const TorusElement& f_here,
                     const QuantumSeed& mutated, const TorusElement& f_there);

/// Exponent k of the product of cuspidal generators: c_k - c_{k_+}, with
/// the sentinel value 0 past the end of the word.
GVec pbw_gvector(const ReducedWord& word, const IntVec& c);

struct PbwPreimage {
    IntVec c;            // nonnegative cuspidal exponents
    IntVec frozen_shift; // a - a', supported on the frozen indices
};

/// Inverse construction: adjusts the frozen entries of a minimally so that
/// all telescoped tail sums along each letter chain are nonnegative, and
/// returns those sums. pbw_gvector(word, c) + frozen_shift = a.
PbwPreimage pbw_from_gvector(const ReducedWord& word, const GVec& a);

/// Denominator vector of f over the seed: -min support exponent at each
/// exchangeable index, zero at frozen indices.
IntVec denominator_vector(const QuantumSeed& seed, const TorusElement& f);

/// True when every coefficient of f is fixed by the bar involution.
/// Expansions produced by the mutation engine are weight-normalized, so
/// this applies to them directly.
bool bar_invariant_coefficients(const TorusElement& f);

// ---------------------------------------------------------------------
// Classical q = 1 oracle. A deliberately separate engine over commutative
// Laurent polynomials with integer coefficients; it shares no code with
// the quantum path so that agreement between the two is meaningful.
// ---------------------------------------------------------------------

/// Commutative Laurent polynomial, exponent -> integer coefficient.
using ClassicalPoly = std::map<IntVec, BigInt>;

struct ClassicalSeed {
    IntMat btilde;
    IntVec exchangeable;
    std::vector<ClassicalPoly> expansions;

    static ClassicalSeed initial(Int size, IntMat btilde, IntVec exchangeable);
    bool operator==(const ClassicalSeed&) const = default;
};

ClassicalPoly classical_mul(const ClassicalPoly& f, const ClassicalPoly& g);
/// Exact quotient in the commutative Laurent ring; throws LaurentFailureError.
ClassicalPoly classical_div(const ClassicalPoly& f, const ClassicalPoly& g);

/// Fomin-Zelevinsky mutation x_k' = (prod x_i^{[b_ik]_+} + prod x_i^{[-b_ik]_+}) / x_k.
ClassicalSeed classical_oracle_mutate(const ClassicalSeed& seed, Int k);

} // namespace qclaw
