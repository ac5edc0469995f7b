#include <doctest.h>

#include <random>

#include "qclaw/rootdata.hpp"

using namespace qclaw;

namespace {

RootVec root(const IntVec& v) { return RootVec{v}; }

// Independent oracle: the matrix of r_i in the alpha basis is
// I - column i of the Cartan matrix placed in row i.
IntMat reflection_matrix(const CartanDatum& cd, Int i) {
    const Int n = cd.rank();
    IntMat m(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), 0));
    for (Int r = 0; r < n; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(r)] = 1;
    for (Int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= cd.entry(i, j);
    return m;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
    IntVec out(v.size(), 0);
    for (size_t r = 0; r < v.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

} // namespace

TEST_CASE("named Cartan data") {
    CHECK(CartanDatum::named("A2").entry(0, 1) == -1);
    CHECK(CartanDatum::named("A2").entry(0, 0) == 2);
    CHECK(CartanDatum::named("A1").rank() == 1);
    const CartanDatum d4 = CartanDatum::named("D4");
    CHECK(d4.rank() == 4);
    CHECK(d4.entry(1, 3) == -1); // fork
    CHECK(d4.entry(2, 3) == 0);
    CHECK_THROWS_AS(CartanDatum::named("B2"), ParseError);
    CHECK_THROWS_AS(CartanDatum(IntMat{{2, 1}, {1, 2}}), ParseError);
    CHECK_THROWS_AS(CartanDatum(IntMat{{2, -1}, {-2, 2}}), ParseError);
}

TEST_CASE("reflect on fundamental weights and roots") {
    const CartanDatum a2 = CartanDatum::named("A2");
    // r_1(varpi_1) = varpi_1 - alpha_1
    const MixedWeight w = reflect(a2, 0, MixedWeight::fundamental(a2, 0));
    CHECK(w.omega_part() == IntVec{1, 0});
    CHECK(w.alpha_part() == IntVec{-1, 0});
    // r_1(alpha_2) = alpha_2 + alpha_1
    CHECK(reflect(a2, 0, root({0, 1})) == root({1, 1}));
}

TEST_CASE("reflect is an involution") {
    const CartanDatum a3 = CartanDatum::named("A3");
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        IntVec om(3), al(3);
        for (auto& x : om) x = static_cast<Int>(rng() % 9) - 4;
        for (auto& x : al) x = static_cast<Int>(rng() % 9) - 4;
        const MixedWeight w(om, al);
        const Int i = static_cast<Int>(rng() % 3);
        CHECK(reflect(a3, i, reflect(a3, i, w)) == w);
    }
}

TEST_CASE("weyl_apply composes reflections, first letter outermost") {
    const CartanDatum a2 = CartanDatum::named("A2");
    // s_1 s_2 (alpha_1) = s_1(alpha_1 + alpha_2) = alpha_2
    CHECK(weyl_apply(a2, ReducedWord{{0, 1}}, root({1, 0})) == root({0, 1}));
    CHECK(weyl_apply(a2, ReducedWord{{}}, root({1, -2})) == root({1, -2}));
    // longest element on varpi_1, both reduced words
    const MixedWeight w0a = weyl_apply(a2, ReducedWord{{0, 1, 0}}, MixedWeight::fundamental(a2, 0));
    const MixedWeight w0b = weyl_apply(a2, ReducedWord{{1, 0, 1}}, MixedWeight::fundamental(a2, 0));
    CHECK(w0a == w0b);
    CHECK(w0a.omega_part() == IntVec{1, 0});
    CHECK(w0a.alpha_part() == IntVec{-1, -1});
}

TEST_CASE("weyl_apply agrees with the reflection-matrix oracle") {
    const CartanDatum a3 = CartanDatum::named("A3");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        IntVec letters(1 + rng() % 5);
        for (auto& x : letters) x = static_cast<Int>(rng() % 3);
        IntVec v(3);
        for (auto& x : v) x = static_cast<Int>(rng() % 7) - 3;
        IntVec expect = v;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            expect = mat_apply(reflection_matrix(a3, *it), expect);
        CHECK(weyl_apply(a3, ReducedWord{letters}, root(v)) == root(expect));
    }
}

TEST_CASE("beta_sequence certifies reducedness") {
    const CartanDatum a2 = CartanDatum::named("A2");
    const auto betas = beta_sequence(a2, ReducedWord{{0, 1, 0}});
    REQUIRE(betas.size() == 3);
    CHECK(betas[0] == root({1, 0}));
    CHECK(betas[1] == root({1, 1}));
    CHECK(betas[2] == root({0, 1}));

    const CartanDatum a1 = CartanDatum::named("A1");
    CHECK(beta_sequence(a1, ReducedWord{{0}}) == std::vector<RootVec>{root({1})});
    CHECK_THROWS_AS(beta_sequence(a1, ReducedWord{{0, 0}}), NotReducedError);
    CHECK_THROWS_AS(beta_sequence(a2, ReducedWord{{0, 1, 0, 1}}), NotReducedError);
}

TEST_CASE("bilinear form values") {
    const CartanDatum a2 = CartanDatum::named("A2");
    CHECK(bilinear(a2, root({1, 0}), root({1, 0})) == 2);
    CHECK(bilinear(a2, root({1, 0}), root({0, 1})) == -1);
    CHECK(bilinear(a2, root({1, 1}), root({1, 1})) == 2);
    CHECK(bilinear(a2, root({1, 0}), WeightVec{{0, 1}}) == 0);
    CHECK(bilinear(a2, root({1, 0}), WeightVec{{1, 0}}) == 1);
    CHECK_THROWS_AS(bilinear(a2, MixedWeight::fundamental(a2, 0), MixedWeight::fundamental(a2, 1)),
                    MixedWeightPairError);
}

TEST_CASE("weyl action preserves the form") {
    const CartanDatum a3 = CartanDatum::named("A3");
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        IntVec letters(1 + rng() % 6);
        for (auto& x : letters) x = static_cast<Int>(rng() % 3);
        IntVec v(3), w(3);
        for (auto& x : v) x = static_cast<Int>(rng() % 7) - 3;
        for (auto& x : w) x = static_cast<Int>(rng() % 7) - 3;
        const ReducedWord word{letters};
        CHECK(bilinear(a3, weyl_apply(a3, word, root(v)), weyl_apply(a3, word, root(w))) ==
              bilinear(a3, root(v), root(w)));
    }
}

TEST_CASE("variable weights") {
    const CartanDatum a2 = CartanDatum::named("A2");
    const ReducedWord w{{0, 1, 0}};
    CHECK(weight_of_var(a2, w, 0) == root({-1, 0}));
    CHECK(weight_of_var(a2, w, 1) == root({-1, -1}));
    CHECK(weight_of_var(a2, w, 2) == root({-1, -1}));
}

TEST_CASE("variable weights lie in the nonpositive root cone") {
    const CartanDatum a3 = CartanDatum::named("A3");
    std::mt19937_64 rng(23);
    int tested = 0;
    while (tested < 30) {
        IntVec letters(1 + rng() % 6);
        for (auto& x : letters) x = static_cast<Int>(rng() % 3);
        const ReducedWord word{letters};
        try {
            beta_sequence(a3, word);
        } catch (const NotReducedError&) {
            continue;
        }
        ++tested;
        for (Int k = 0; k < word.length(); ++k) {
            const RootVec wt = weight_of_var(a3, word, k);
            for (Int c : wt.coords) CHECK(c <= 0);
        }
    }
}
