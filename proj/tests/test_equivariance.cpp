#include <random>

#include "doctest.h"
#include "hitprob/equivariance.hpp"

using namespace hitprob;

static Polynomial P(const std::string& s, int k) { return parse_polynomial(s, k); }

TEST_CASE("generator substitutions act as expected on variables") {
    LinearSubstitution t = rho(1, 3);
    CHECK(apply_substitution(t, P("x1", 3)) == P("x2", 3));
    CHECK(apply_substitution(t, P("x2", 3)) == P("x1", 3));
    CHECK(apply_substitution(t, P("x3", 3)) == P("x3", 3));

    LinearSubstitution v = rho(3, 3);  // transvection
    CHECK(apply_substitution(v, P("x1", 3)) == P("x1 + x2", 3));
    CHECK(apply_substitution(v, P("x2", 3)) == P("x2", 3));
    CHECK(apply_substitution(v, P("x1 x2", 3)) == P("x1 x2 + x2^2", 3));
    CHECK_THROWS(rho(0, 3));
    CHECK_THROWS(rho(4, 3));
}

TEST_CASE("p_map definition") {
    // p_(2; {3}) on k = 3: x1 -> x1, x2 -> x2, x3 -> x2
    LinearSubstitution p = p_map(2, {3}, 3);
    CHECK(apply_substitution(p, P("x1 x3", 3)) == P("x1 x2", 2));
    CHECK(apply_substitution(p, P("x2 + x3", 3)).is_zero());
    // p_(1; {2,3}): x1 -> x1 + x2, x2 -> x1, x3 -> x2
    LinearSubstitution q = p_map(1, {2, 3}, 3);
    CHECK(apply_substitution(q, P("x1", 3)) == P("x1 + x2", 2));
    CHECK(apply_substitution(q, P("x2 x3", 3)) == P("x1 x2", 2));
    CHECK_THROWS(p_map(2, {2}, 3));  // I must lie above i
    CHECK_THROWS(p_map(2, {}, 3));
}

TEST_CASE("transpositions square to the identity on the quotient") {
    QuotientBasis qb = admissible_basis(3, 5);
    for (int j = 1; j < 3; ++j) {
        LinearSubstitution s = rho(j, 3);
        for (size_t t = 0; t < qb.dim(); ++t) {
            Polynomial once = apply_substitution(s, Polynomial(qb.admissible_monomial(t)));
            ClassCoordinates back = reduce_class(apply_substitution(s, once), qb);
            BitVector e(qb.dim());
            e.set(t);
            CHECK(back.bits == e);
        }
    }
}

// Brute force: enumerate every class of the (small) quotient and keep those
// fixed by all generators.
static size_t brute_invariant_dim(const QuotientBasis& qb,
                                  const std::vector<LinearSubstitution>& gens) {
    REQUIRE(qb.dim() <= 14);
    EchelonSpace fixed(qb.dim());
    for (uint32_t mask = 1; mask < (1u << qb.dim()); ++mask) {
        Polynomial rep(qb.k);
        for (size_t t = 0; t < qb.dim(); ++t)
            if (mask & (1u << t)) rep = poly_add(rep, Polynomial(qb.admissible_monomial(t)));
        bool ok = true;
        for (const auto& g : gens)
            if (!reduce_class(poly_add(apply_substitution(g, rep), rep), qb).bits.is_zero())
                ok = false;
        if (ok) {
            BitVector v(qb.dim());
            for (size_t t = 0; t < qb.dim(); ++t)
                if (mask & (1u << t)) v.set(t);
            fixed.insert(v);
        }
    }
    return fixed.rank();
}

TEST_CASE("invariants match brute force on small quotients") {
    for (int k = 2; k <= 3; ++k)
        for (uint64_t d = 2; d <= 6; ++d) {
            QuotientBasis qb = admissible_basis(k, d);
            if (qb.dim() == 0 || qb.dim() > 14) continue;
            std::vector<LinearSubstitution> sig, gl;
            for (int j = 1; j < k; ++j) sig.push_back(rho(j, k));
            gl = sig;
            gl.push_back(rho(k, k));
            CHECK(sigma_invariants(qb).size() == brute_invariant_dim(qb, sig));
            CHECK(gl_invariants(qb).size() == brute_invariant_dim(qb, gl));
        }
}

TEST_CASE("redundant generators leave the invariants unchanged") {
    std::mt19937 rng(4242);
    QuotientBasis qb = admissible_basis(4, 7);
    std::vector<LinearSubstitution> gens;
    for (int j = 1; j < 4; ++j) gens.push_back(rho(j, 4));
    auto base = invariant_subspace(qb, gens);
    // add random products of transpositions (arbitrary permutations)
    for (int extra = 0; extra < 3; ++extra) {
        LinearSubstitution prod = rho(1 + static_cast<int>(rng() % 3), 4);
        for (int step = 0; step < 4; ++step) {
            LinearSubstitution next = rho(1 + static_cast<int>(rng() % 3), 4);
            for (auto& img : prod.images) img = apply_substitution(next, img);
        }
        gens.push_back(prod);
    }
    auto extended = invariant_subspace(qb, gens);
    REQUIRE(base.size() == extended.size());
    EchelonSpace span(qb.dim());
    for (const auto& v : base) span.insert(v);
    for (const auto& v : extended) CHECK(span.contains(v));
}

TEST_CASE("invariance certificates hold for computed representatives") {
    QuotientBasis qb = admissible_basis(3, 8);
    auto inv = gl_invariants(qb);
    for (const auto& v : inv) {
        ClassCoordinates cc;
        cc.basis = &qb;
        cc.bits = v;
        Polynomial rep = cc.representative();
        for (int j = 1; j <= 3; ++j)
            CHECK(reduce_class(poly_add(apply_substitution(rho(j, 3), rep), rep), qb)
                      .bits.is_zero());
    }
}

TEST_CASE("sf_tilde members really vanish under every p_map") {
    int k = 3;
    uint64_t d = 7;
    // pick a weight that occurs in the degree
    QuotientBasis full = admissible_basis(k, d);
    REQUIRE(full.dim() > 0);
    WeightVector w = weight_vector(full.table->monomial(full.admissible.back()));
    SFTildeResult res = sf_tilde(k, d, w);
    std::optional<QuotientBasis> maybe;
    try {
        maybe = weight_quotient_basis(k - 1, d, w);
    } catch (const std::invalid_argument&) {
        // weight absent in k-1 variables: constraints are vacuous
        CHECK(res.basis.size() == res.bplus.size());
        return;
    }
    QuotientBasis& qb2 = *maybe;
    for (const auto& v : res.basis) {
        Polynomial rep(k);
        for (size_t t = 0; t < v.size(); ++t)
            if (v.get(t)) rep.toggle(res.bplus[t]);
        for (int i = 1; i <= k; ++i)
            for (int mask = 1; mask < (1 << (k - i)); ++mask) {
                std::vector<int> I;
                for (int b = 0; b < k - i; ++b)
                    if (mask & (1 << b)) I.push_back(i + 1 + b);
                Polynomial img = apply_substitution(p_map(i, I, k), rep);
                CHECK(reduce_class(img, qb2).bits.is_zero());
            }
    }
}
