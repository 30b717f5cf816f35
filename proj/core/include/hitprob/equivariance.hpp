#pragma once

#include <vector>

#include "hitprob/solver.hpp"

namespace hitprob {

/// F2-linear change of variables P_{src_k} -> P_{dst_k}: x_i maps to
/// images[i-1], a (possibly empty) sum of dst variables.
struct LinearSubstitution {
    int src_k = 0;
    int dst_k = 0;
    std::vector<Polynomial> images;
};

/// Standard generators of GL_k: for 1 <= j < k the transposition of x_j and
/// x_{j+1}; for j = k the transvection x_1 -> x_1 + x_2, other variables
/// fixed. The first k-1 generate the symmetric group.
LinearSubstitution rho(int j, int k);

/// Singer's projections P_k -> P_{k-1}: x_t -> x_t for t < i,
/// x_i -> sum over u in I of x_{u-1}, x_t -> x_{t-1} for t > i.
/// I must be a nonempty subset of {i+1, ..., k}.
LinearSubstitution p_map(int i, const std::vector<int>& I, int k);

Polynomial apply_substitution(const LinearSubstitution& s, const Polynomial& f);

/// Matrix of the induced map src -> dst on admissible classes:
/// entry (i, t) is the coefficient of dst basis element i in the image of
/// src basis element t. Degrees must agree; dst may carry a weight, in which
/// case the image is reduced in the weight subquotient.
F2Matrix action_matrix(const LinearSubstitution& s, const QuotientBasis& src,
                       const QuotientBasis& dst);

/// Basis of the joint fixed space {u : s(u) = u for all s}, as coordinate
/// vectors over qb's admissible monomials.
std::vector<BitVector> invariant_subspace(const QuotientBasis& qb,
                                          const std::vector<LinearSubstitution>& gens);

std::vector<BitVector> sigma_invariants(const QuotientBasis& qb);
std::vector<BitVector> gl_invariants(const QuotientBasis& qb);

/// The space SF~_k(w): classes supported on the admissible monomials
/// divisible by every variable whose image under each p_(i;I) vanishes in
/// QP_{k-1}(w).
struct SFTildeResult {
    int k = 0;
    uint64_t d = 0;
    WeightVector weight;
    std::vector<Monomial> bplus;    // coordinate system of the vectors below
    std::vector<BitVector> basis;   // joint-kernel basis over bplus
};

SFTildeResult sf_tilde(int k, uint64_t d, const WeightVector& w);

}  // namespace hitprob
