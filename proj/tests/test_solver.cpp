#include <random>
#include <set>

#include "doctest.h"
#include "hitprob/solver.hpp"

using namespace hitprob;

// Dimension of (QP_k)_d computed the slow way: span of Sq^j(m) over every
// j >= 1 — not only the powers of two the library uses.
static size_t brute_dim(int k, uint64_t d) {
    auto table = get_table(k, d, MonomialOrder::WeightLex);
    EchelonSpace es(table->size());
    for (uint64_t j = 1; j < d; ++j)
        for (const Monomial& m : enumerate_monomials(k, d - j)) {
            Polynomial img = sq_monomial(static_cast<uint32_t>(j), m);
            if (!img.is_zero()) es.insert(to_bits(img, *table));
        }
    return table->size() - es.rank();
}

TEST_CASE("known small dimensions against the brute-force oracle") {
    for (int k = 1; k <= 3; ++k)
        for (uint64_t d = 1; d <= 9; ++d)
            CHECK(admissible_basis(k, d).dim() == brute_dim(k, d));
    // classical values for one variable: x^d is hit unless d = 2^s - 1
    for (uint64_t d = 1; d <= 9; ++d) {
        bool spiky = (d & (d + 1)) == 0;
        CHECK(admissible_basis(1, d).dim() == (spiky ? 1u : 0u));
    }
    // degree 3 in two variables: only Sq^1(x1 x2) gives a relation
    CHECK(admissible_basis(2, 3).dim() == 3);
    CHECK(admissible_basis(5, 0).dim() == 1);  // degenerate: the constant
}

TEST_CASE("weight subquotient dimensions add up to the full dimension") {
    for (int k = 2; k <= 4; ++k)
        for (uint64_t d = 3; d <= 9; ++d) {
            QuotientBasis qb = admissible_basis(k, d);
            std::set<WeightVector> ws;
            for (uint32_t c : qb.admissible) ws.insert(weight_vector(qb.table->monomial(c)));
            size_t total = 0;
            for (const auto& w : ws) total += weight_quotient_basis(k, d, w).dim();
            CHECK(total == qb.dim());
        }
    CHECK_THROWS(weight_quotient_basis(3, 5, {9, 9}));  // weight absent from the degree
    CHECK_THROWS(weight_quotient_basis(3, 5, {1, 2}, MonomialOrder::Lex));
}

TEST_CASE("reduce_class properties") {
    QuotientBasis qb = admissible_basis(3, 8);
    std::mt19937 rng(17);

    // hit generators reduce to zero
    HitGeneratorStream stream(3, 8);
    stream.for_each([&](uint32_t, const Monomial&, const Polynomial& img) {
        if (!img.is_zero()) CHECK(reduce_class(img, qb).bits.is_zero());
    });

    // a representative reduces to its own coordinates; reduction is additive
    for (int it = 0; it < 30; ++it) {
        BitVector v(qb.dim());
        for (size_t t = 0; t < qb.dim(); ++t)
            if (rng() & 1) v.set(t);
        ClassCoordinates cc;
        cc.basis = &qb;
        cc.bits = v;
        Polynomial rep = cc.representative();
        if (rep.is_zero()) continue;
        CHECK(reduce_class(rep, qb).bits == v);
    }
    CHECK_THROWS(reduce_class(parse_polynomial("x1 + x1^2", 3), qb));  // non-homogeneous
    CHECK_THROWS(reduce_class(parse_polynomial("x1^8", 2), qb));       // wrong k
}

TEST_CASE("weight reduction drops lower weights and rejects higher ones") {
    // degree 5 in 2 variables: weight of x1 x2^4 is (1,0,1), of x1^2 x2^3 is (1,2)
    QuotientBasis qb = weight_quotient_basis(2, 5, WeightVector{1, 2});
    CHECK_NOTHROW(reduce_class(parse_polynomial("x1^2 x2^3", 2), qb));
    // (1,0,1) < (1,2): lower-weight input is congruent to zero
    CHECK(reduce_class(parse_polynomial("x1 x2^4", 2), qb).bits.is_zero());
    // and in the (1,0,1) piece a (1,2)-term is out of the filtration
    QuotientBasis low = weight_quotient_basis(2, 5, WeightVector{1, 0, 1});
    CHECK_THROWS(reduce_class(parse_polynomial("x1^2 x2^3", 2), low));
}

TEST_CASE("split_B0_plus partitions the basis") {
    QuotientBasis qb = admissible_basis(3, 7);
    auto [b0, bp] = split_B0_plus(qb);
    CHECK(b0.size() + bp.size() == qb.dim());
    for (const auto& m : b0) {
        bool z = false;
        for (uint32_t e : m.exponents) z |= (e == 0);
        CHECK(z);
    }
    for (const auto& m : bp)
        for (uint32_t e : m.exponents) CHECK(e > 0);
}

TEST_CASE("singer filter never flags an admissible monomial") {
    for (int k = 2; k <= 3; ++k)
        for (uint64_t d = 1; d <= 10; ++d) {
            QuotientBasis qb = admissible_basis(k, d);
            for (uint32_t c : qb.admissible)
                CHECK(!singer_filter(qb.table->monomial(c), k));
        }
    // and it does flag something known to be hit: x1^2 = Sq^1(x1)
    CHECK(singer_filter(Monomial({2, 0}), 2));
}
