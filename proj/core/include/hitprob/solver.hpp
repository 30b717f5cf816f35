#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hitprob/f2.hpp"
#include "hitprob/order.hpp"
#include "hitprob/polynomial.hpp"
#include "hitprob/steenrod.hpp"

namespace hitprob {

using EchelonSpacePtr = std::shared_ptr<const EchelonSpace>;

/// Admissible-monomial basis of (QP_k)_d, or of the weight subquotient
/// QP_k(w) when weight is set. Relations hold the hit subspace; for a weight
/// subquotient the strictly-lower-weight coordinates are additionally treated
/// as relations (they are unit vectors, tracked by weight id rather than
/// stored as rows).
struct QuotientBasis {
    int k;
    uint64_t d;
    MonomialOrder order;
    std::optional<WeightVector> weight;
    MonomialTablePtr table;
    EchelonSpacePtr relations;  // hit subspace echelon over all (k, d) monomials
    std::vector<uint32_t> admissible;         // coordinates, ascending
    std::vector<int32_t> coord_to_position;   // coord -> index into admissible, -1 otherwise
    uint16_t weight_id = 0;                   // valid when weight is set

    size_t dim() const { return admissible.size(); }
    const Monomial& admissible_monomial(size_t t) const {
        return table->monomial(admissible[t]);
    }
};

/// Coordinates of a class over a QuotientBasis's admissible monomials.
struct ClassCoordinates {
    const QuotientBasis* basis = nullptr;
    BitVector bits;  // length basis->dim()

    Polynomial representative() const;
};

/// Echelon span of all hit generators of degree d in k variables.
/// Heavy for large (k, d); results are memoized per process and optionally
/// cached on disk (see cache_dir below).
EchelonSpacePtr hit_space(int k, uint64_t d, MonomialOrder ord = MonomialOrder::WeightLex);

QuotientBasis admissible_basis(int k, uint64_t d, MonomialOrder ord = MonomialOrder::WeightLex);

QuotientBasis weight_quotient_basis(int k, uint64_t d, const WeightVector& w,
                                    MonomialOrder ord = MonomialOrder::WeightLex);

/// Reduces a homogeneous polynomial to coordinates over the admissible
/// monomials. With a weight set, lower-weight terms reduce to zero and a
/// strictly higher-weight term is an error.
ClassCoordinates reduce_class(const Polynomial& f, const QuotientBasis& qb);

/// Vector form of a polynomial in the basis's coordinate system.
BitVector to_bits(const Polynomial& f, const MonomialTable& table);

/// Partition of the admissible list: (monomials with a zero exponent,
/// monomials divisible by x1...xk).
std::pair<std::vector<Monomial>, std::vector<Monomial>> split_B0_plus(const QuotientBasis& qb);

/// Singer's hit criterion: true implies m is hit. A pre-filter only.
bool singer_filter(const Monomial& m, int k);

/// Progress callback for the long eliminations: fn(pairs_done, pairs_total, rank).
void set_hit_progress(std::function<void(uint64_t, uint64_t, size_t)> fn);

/// On-disk cache directory for hit spaces ("" disables; also set from the
/// HITPROB_CACHE environment variable by the CLI).
void set_cache_dir(const std::string& dir);
const std::string& cache_dir();

}  // namespace hitprob
