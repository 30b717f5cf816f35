#include <random>

#include "doctest.h"
#include "hitprob/order.hpp"
#include "hitprob/steenrod.hpp"

using namespace hitprob;

static Polynomial P(const std::string& s, int k) { return parse_polynomial(s, k); }

TEST_CASE("binomial parity follows Lucas") {
    // reference: Pascal's triangle mod 2 built by additions
    int pas[33][33] = {};
    pas[0][0] = 1;
    for (int a = 1; a <= 32; ++a)
        for (int j = 0; j <= a; ++j)
            pas[a][j] = (j ? pas[a - 1][j - 1] : 0) ^ pas[a - 1][j];
    for (uint64_t a = 0; a <= 32; ++a)
        for (uint64_t j = 0; j <= a; ++j) CHECK(binom_parity(a, j) == pas[a][j]);
    CHECK(binom_parity(5, 2) == 0);
    CHECK(binom_parity(5, 4) == 1);
    CHECK(binom_parity(6, 2) == 1);
}

TEST_CASE("single-variable squares") {
    // Sq^j(x^a) = C(a,j) x^(a+j)
    for (uint32_t a = 0; a <= 12; ++a)
        for (uint32_t j = 0; j <= 12; ++j) {
            Polynomial got = sq_monomial(j, Monomial({a}));
            if (j <= a && binom_parity(a, j)) {
                CHECK(got == Polynomial(Monomial({a + j})));
            } else {
                CHECK(got.is_zero());
            }
        }
}

TEST_CASE("hand-checked Cartan expansions") {
    CHECK(sq(1, P("x1 x2", 2)) == P("x1^2 x2 + x1 x2^2", 2));
    CHECK(sq(1, P("x1^2", 1)).is_zero());
    CHECK(sq(1, P("x1^3", 1)) == P("x1^4", 1));
    CHECK(sq(2, P("x1 x2 x3", 3)) ==
          P("x1^2 x2^2 x3 + x1^2 x2 x3^2 + x1 x2^2 x3^2", 3));
    CHECK(sq(0, P("x1^5 x2", 2)) == P("x1^5 x2", 2));
}

TEST_CASE("squaring law and unstability") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 50; ++it) {
        int k = 1 + static_cast<int>(rng() % 3);
        uint64_t d = 1 + rng() % 6;
        Polynomial f(k);
        for (int t = 0; t < 3; ++t) {
            std::vector<uint32_t> e(static_cast<size_t>(k), 0);
            for (uint64_t i = 0; i < d; ++i) e[rng() % static_cast<uint32_t>(k)] += 1;
            f.toggle(Monomial(std::move(e)));
        }
        if (f.is_zero()) continue;
        CHECK(sq(static_cast<uint32_t>(d), f) == poly_mul(f, f));
        CHECK(sq(static_cast<uint32_t>(d) + 1 + rng() % 3, f).is_zero());
    }
    CHECK_THROWS(sq(1, P("x1 + x1^2", 1)));  // non-homogeneous
}

TEST_CASE("generator stream") {
    HitGeneratorStream s(3, 6);
    // 2^s in {1, 2, 4}: C(7,2) + C(6,2) + C(4,2) = 21 + 15 + 6
    CHECK(s.pair_count() == 42);
    uint64_t seen = 0;
    s.for_each([&](uint32_t sh, const Monomial& m, const Polynomial& img) {
        ++seen;
        CHECK(degree(m) + (uint64_t(1) << sh) == 6);
        if (!img.is_zero()) CHECK(img.degree() == 6);
        CHECK(img == sq(uint32_t(1) << sh, Polynomial(m)));
    });
    CHECK(seen == s.pair_count());
    CHECK_THROWS(HitGeneratorStream(0, 5));
}
