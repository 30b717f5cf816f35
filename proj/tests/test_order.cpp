#include <numeric>

#include "doctest.h"
#include "hitprob/order.hpp"

using namespace hitprob;

static uint64_t choose(uint64_t n, uint64_t r) {
    uint64_t v = 1;
    for (uint64_t i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

TEST_CASE("enumeration counts compositions") {
    for (int k = 1; k <= 4; ++k)
        for (uint64_t d = 0; d <= 8; ++d) {
            auto ms = enumerate_monomials(k, d);
            CHECK(ms.size() == choose(d + static_cast<uint64_t>(k) - 1,
                                      static_cast<uint64_t>(k) - 1));
        }
}

TEST_CASE("enumeration is strictly increasing in both orders") {
    for (MonomialOrder ord : {MonomialOrder::WeightLex, MonomialOrder::Lex}) {
        auto ms = enumerate_monomials(3, 7, ord);
        for (size_t i = 1; i < ms.size(); ++i)
            CHECK(compare(ms[i - 1], ms[i], ord) == std::strong_ordering::less);
    }
}

TEST_CASE("compare rejects mixed inputs") {
    CHECK_THROWS(compare(Monomial({1, 2}), Monomial({1, 1, 1}), MonomialOrder::Lex));
    CHECK_THROWS(compare(Monomial({1, 2}), Monomial({2, 2}), MonomialOrder::Lex));
}

TEST_CASE("weight filter") {
    auto ms = enumerate_monomials(3, 4, MonomialOrder::WeightLex, WeightVector{0, 2});
    // exponent multisets {2, 2, 0}
    CHECK(ms.size() == 3);
    for (const auto& m : ms) CHECK(weight_vector(m) == WeightVector{0, 2});
}

TEST_CASE("table round trip and contiguous weight classes") {
    auto table = get_table(4, 9, MonomialOrder::WeightLex);
    CHECK(table->size() == choose(12, 3));
    for (size_t c = 0; c < table->size(); ++c)
        CHECK(table->coordinate(table->monomial(c)) == c);
    // weight ids ascend with the coordinate, so each class is a block
    for (size_t c = 1; c < table->size(); ++c)
        CHECK(table->weight_id(c - 1) <= table->weight_id(c));
    for (uint16_t i = 0; i < table->weights().size(); ++i)
        CHECK(table->weight_index(table->weights()[i]) == i);
    CHECK_THROWS(table->weight_index({9, 9, 9}));
    CHECK_THROWS(table->coordinate(Monomial({10, 0, 0, 0})));
}

TEST_CASE("registry returns the same table") {
    CHECK(get_table(3, 6, MonomialOrder::Lex) == get_table(3, 6, MonomialOrder::Lex));
}
