#pragma once

#include <cstdint>
#include <functional>

#include "hitprob/polynomial.hpp"

namespace hitprob {

/// C(a, j) mod 2 by Lucas: 1 iff the bits of j are a subset of the bits of a.
inline int binom_parity(uint64_t a, uint64_t j) { return (j & ~a) == 0 ? 1 : 0; }

/// Sq^j on a single monomial via the Cartan formula across the variables.
Polynomial sq_monomial(uint32_t j, const Monomial& m);

/// F2-linear extension; f must be homogeneous.
Polynomial sq(uint32_t j, const Polynomial& f);

/// Generators of the hit subspace in degree d: the polynomials Sq^{2^s}(m)
/// over all s with 2^s <= d and all monomials m of degree d - 2^s.
/// Zero images are yielded too, keeping the pair count predictable.
class HitGeneratorStream {
public:
    HitGeneratorStream(int k, uint64_t d);

    /// Total number of (s, m) pairs the stream yields.
    uint64_t pair_count() const;

    /// Calls fn(s, m, Sq^{2^s}(m)) for every pair.
    void for_each(const std::function<void(uint32_t s, const Monomial& m,
                                           const Polynomial& image)>& fn) const;

    int k() const { return k_; }
    uint64_t d() const { return d_; }

private:
    int k_;
    uint64_t d_;
};

}  // namespace hitprob
