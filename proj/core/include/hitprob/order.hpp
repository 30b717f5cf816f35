#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hitprob/monomial.hpp"

namespace hitprob {

enum class MonomialOrder {
    WeightLex,  // weight vectors left-lex, then exponents lex, x1 most significant
    Lex,        // diagnostic: exponents lex only
};

/// Total order on monomials of equal k and degree; throws on mismatch.
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder ord);

/// All monomials of degree d in k variables, ascending in the order;
/// optionally restricted to a weight vector.
std::vector<Monomial> enumerate_monomials(
    int k, uint64_t d, MonomialOrder ord = MonomialOrder::WeightLex,
    const std::optional<WeightVector>& weight = std::nullopt);

/// Coordinate system for one (k, d, order): monomial <-> coordinate index,
/// with coordinate 0 the smallest monomial. Weight classes are tracked so a
/// weight filtration can be read off coordinates.
class MonomialTable {
public:
    MonomialTable(int k, uint64_t d, MonomialOrder ord);

    int k() const { return k_; }
    uint64_t d() const { return d_; }
    MonomialOrder order() const { return ord_; }
    size_t size() const { return monomials_.size(); }

    const Monomial& monomial(size_t coord) const { return monomials_[coord]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Coordinate of a monomial; throws if it is not of this (k, d).
    size_t coordinate(const Monomial& m) const;

    /// Distinct weight vectors occurring in the degree, ascending left-lex.
    const std::vector<WeightVector>& weights() const { return weights_; }
    /// Index into weights() of the coordinate's monomial.
    uint16_t weight_id(size_t coord) const { return weight_id_[coord]; }
    /// Index of a weight in weights(); throws if the weight does not occur.
    uint16_t weight_index(const WeightVector& w) const;

private:
    int k_;
    uint64_t d_;
    MonomialOrder ord_;
    std::vector<Monomial> monomials_;
    std::unordered_map<uint64_t, uint32_t> index_;  // packed exponents -> coord
    std::vector<WeightVector> weights_;
    std::vector<uint16_t> weight_id_;
};

using MonomialTablePtr = std::shared_ptr<const MonomialTable>;

/// Process-wide table registry keyed by (k, d, order).
MonomialTablePtr get_table(int k, uint64_t d, MonomialOrder ord);

}  // namespace hitprob
