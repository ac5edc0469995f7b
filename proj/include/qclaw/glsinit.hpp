#pragma once

#include "qclaw/seed.hpp"

namespace qclaw {

/// Initial seed of the cluster structure attached to a reduced word,
/// together with the combinatorial data used to build and certify it.
struct InitialSeedData {
    ReducedWord word;
    IntVec kplus;    // per index, next position with the same letter; sentinel l
    IntVec frozen;   // indices with kplus = l (0-based, sorted)
    IntVec iprime;   // letters occurring in the word (0-based, sorted)
    IntMat d_matrix; // |iprime| x l, alpha-coordinates of the variable weights
    QuantumSeed seed;
};

/// Next position after k carrying the same letter; l when there is none.
Int kplus(const ReducedWord& word, Int k);
/// Previous position before k carrying the same letter; -1 when there is none.
Int kminus(const ReducedWord& word, Int k);

/// The l x Kex exchange matrix of the initial seed:
///   b_{st} = +1        if s = t_+,
///            -1        if t = s_+,
///            a_{i_s i_t}  if t < s < t_+ < s_+,
///           -a_{i_s i_t}  if s < t < s_+ < t_+,
///            0 otherwise.
IntMat initial_exchange_matrix(const CartanDatum& cd, const ReducedWord& word);

/// Lambda with entries (s <= t): Lambda_{st} = (w_{<=t} varpi_{i_t} + varpi_{i_t}, wt(M_s)),
/// extended skew-symmetrically. Zero diagonal comes out of the formula.
LambdaMatrix initial_lambda(const CartanDatum& cd, const ReducedWord& word);

/// D matrix: alpha-coordinates of wt(M_j) restricted to the letters of the
/// word. Throws SupportLeakError if any weight has support outside them.
IntMat weight_matrix(const CartanDatum& cd, const ReducedWord& word, IntVec* iprime_out = nullptr);

/// Independent reconstruction of Btilde: solves [Lambda'; D] * B = [-2I; 0]
/// exactly over the rationals and demands an integer result. Also checks
/// that D has full row rank. Throws SingularError / NonIntegralError.
IntMat btilde_from_lambda(const IntMat& lambda_prime, const IntMat& d_matrix);

/// Builds the initial quantum seed: L = -Lambda, the certified Btilde,
/// variable weights, unit-monomial expansions. Construction aborts with
/// ConventionMismatchError if any of the cross-checks fail; no sign repair
/// is ever attempted.
InitialSeedData initial_seed(const CartanDatum& cd, const ReducedWord& word);

} // namespace qclaw
