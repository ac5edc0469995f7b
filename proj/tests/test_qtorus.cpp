#include <doctest.h>

#include <random>

#include "qclaw/json_io.hpp"
#include "qclaw/qtorus.hpp"

using namespace qclaw;

namespace {

// A2 word (1,2,1) initial torus commutation matrix.
LambdaMatrix a2_L() { return LambdaMatrix({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}); }

LambdaMatrix random_skew(std::mt19937_64& rng, Int n) {
    IntMat m(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), 0));
    for (Int i = 0; i < n; ++i)
        for (Int j = i + 1; j < n; ++j) {
            const Int v = static_cast<Int>(rng() % 7) - 3;
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
        }
    return LambdaMatrix(std::move(m));
}

TorusElement random_element(std::mt19937_64& rng, Int n, int max_terms = 3) {
    TorusElement f;
    const int t = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < t; ++i) {
        ExpVec a(static_cast<size_t>(n));
        for (auto& x : a) x = static_cast<Int>(rng() % 7) - 3;
        const Int c = static_cast<Int>(rng() % 7) - 3;
        const Int e = static_cast<Int>(rng() % 5) - 2;
        f.add_term(a, QInt::term(e, c));
    }
    return f;
}

using CPoly = std::map<ExpVec, BigInt>;
CPoly cmul(const CPoly& f, const CPoly& g) {
    CPoly r;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            auto key = expvec_add(a, b);
            r[key] += ca * cb;
            if (r[key] == 0) r.erase(key);
        }
    return r;
}

} // namespace

TEST_CASE("monomial product exponent") {
    const LambdaMatrix L = a2_L();
    const ExpVec a{2, -1, 3};
    CHECK(monomial_product_vpow(L, a, a) == 0);
    CHECK(monomial_product_vpow(L, unit_exp(3, 0), unit_exp(3, 1)) == -1);
    CHECK(monomial_product_vpow(L, ExpVec{0, 0, 0}, a) == 0);
}

TEST_CASE("monomial multiplication") {
    const LambdaMatrix L = a2_L();
    const TorusElement x1 = TorusElement::monomial(unit_exp(3, 0));
    const TorusElement x2 = TorusElement::monomial(unit_exp(3, 1));
    CHECK(mul(L, x1, x2) == TorusElement::monomial({1, 1, 0}, QInt::vpow(-1)));
    std::mt19937_64 rng(2);
    const TorusElement f = random_element(rng, 3);
    CHECK(mul(L, f, TorusElement::one(3)) == f);
    CHECK(mul(L, x1, TorusElement::monomial({-1, 0, 0})) == TorusElement::one(3));
}

TEST_CASE("bar fixes normalized monomials") {
    const TorusElement xa = TorusElement::monomial({2, -1, 0});
    CHECK(xa.bar() == xa);
    const QInt sym = QInt::vpow(1) + QInt::vpow(-1);
    CHECK(xa.scale(sym).bar() == xa.scale(sym));
    CHECK(xa.scale(QInt::vpow(1)).bar() == xa.scale(QInt::vpow(-1)));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        const TorusElement f = random_element(rng, 3);
        const TorusElement g = random_element(rng, 3);
        CHECK(f.bar().bar() == f);
        CHECK((f + g).bar() == f.bar() + g.bar());
    }
}

TEST_CASE("multiplication is associative and support-symmetric") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const LambdaMatrix L = random_skew(rng, 4);
        const TorusElement f = random_element(rng, 4);
        const TorusElement g = random_element(rng, 4);
        const TorusElement h = random_element(rng, 4);
        CHECK(mul(L, mul(L, f, g), h) == mul(L, f, mul(L, g, h)));
        // monomial pairs commute up to the predicted unit
        ExpVec a(4), b(4);
        for (auto& x : a) x = static_cast<Int>(rng() % 5) - 2;
        for (auto& x : b) x = static_cast<Int>(rng() % 5) - 2;
        const TorusElement xa = TorusElement::monomial(a);
        const TorusElement xb = TorusElement::monomial(b);
        const Int twist = monomial_product_vpow(L, a, b) - monomial_product_vpow(L, b, a);
        CHECK(mul(L, xa, xb) == mul(L, xb, xa).scale(QInt::vpow(twist)));
    }
}

TEST_CASE("left division: monomials and the exchange pattern") {
    const LambdaMatrix L = a2_L();
    // monomial quotient picks up the inverse monomial-rule unit
    const ExpVec a{1, 0, 2}, b{-1, 3, 1};
    const TorusElement prod = TorusElement::monomial(
        expvec_add(a, b), QInt::vpow(monomial_product_vpow(L, a, b)));
    CHECK(divide_left_exact(L, prod, TorusElement::monomial(a)) == TorusElement::monomial(b));

    // two-term quotient against a one-term divisor
    TorusElement f = TorusElement::monomial({0, 0, 1}) +
                     TorusElement::monomial({0, 1, 0}, QInt::vpow(1));
    const TorusElement expected = TorusElement::monomial({-1, 0, 1}, QInt::vpow(-1)) +
                                  TorusElement::monomial({-1, 1, 0}, QInt::vpow(2));
    const TorusElement h = divide_left_exact(L, f, TorusElement::monomial(unit_exp(3, 0)));
    CHECK(h == expected);
    CHECK(mul(L, TorusElement::monomial(unit_exp(3, 0)), h) == f);

    CHECK_THROWS_AS(divide_left_exact(L, f, TorusElement::zero()), Error);
    // 1 is not left-divisible by 1 - X^{-e_1}
    const TorusElement g = TorusElement::one(3) - TorusElement::monomial({-1, 0, 0});
    CHECK_THROWS_AS(divide_left_exact(L, TorusElement::one(3), g), NotDivisibleError);
}

TEST_CASE("left division inverts left multiplication") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const LambdaMatrix L = random_skew(rng, 3);
        TorusElement g = random_element(rng, 3);
        if (g.is_zero()) continue;
        const TorusElement h = random_element(rng, 3);
        CHECK(divide_left_exact(L, mul(L, g, h), g) == h);
    }
}

TEST_CASE("q = 1 specialization") {
    const LambdaMatrix L = a2_L();
    const TorusElement f = TorusElement::monomial({1, 0, 2}, QInt::vpow(3));
    CHECK(f.specialize_q1() == std::map<ExpVec, BigInt>{{{1, 0, 2}, 1}});
    TorusElement g = TorusElement::monomial({1, 0, 2});
    g.add_term({1, 0, 2}, QInt::vpow(1) - QInt::one()); // coefficient becomes v
    CHECK(g.specialize_q1() == std::map<ExpVec, BigInt>{{{1, 0, 2}, 1}});
    CHECK(TorusElement::zero().specialize_q1().empty());

    // ring homomorphism onto the commutative Laurent ring
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const TorusElement a = random_element(rng, 3);
        const TorusElement b = random_element(rng, 3);
        CHECK(mul(L, a, b).specialize_q1() == cmul(a.specialize_q1(), b.specialize_q1()));
    }
}

TEST_CASE("canonical JSON is byte-stable and round-trips") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const TorusElement f = random_element(rng, 3);
        const Json j = torus_element_to_json(f);
        CHECK(torus_element_from_json(j) == f);
        CHECK(j.dump() == torus_element_to_json(f).dump());
    }
    const TorusElement f = TorusElement::monomial({0, 0, 1}) +
                           TorusElement::monomial({0, 1, 0}, QInt::vpow(1));
    CHECK(torus_element_to_json(f).dump() ==
          R"([{"coeff":"1*v^0","exponent":[0,0,1]},{"coeff":"1*v^1","exponent":[0,1,0]}])");
}
