#include "hitprob/equivariance.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitprob {

static Polynomial variable(int i, int k) {
    std::vector<uint32_t> e(static_cast<size_t>(k), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return Polynomial(Monomial(std::move(e)));
}

LinearSubstitution rho(int j, int k) {
    if (j < 1 || j > k) throw std::invalid_argument("rho: need 1 <= j <= k");
    LinearSubstitution s;
    s.src_k = s.dst_k = k;
    for (int i = 1; i <= k; ++i) s.images.push_back(variable(i, k));
    if (j < k) {
        std::swap(s.images[static_cast<size_t>(j - 1)], s.images[static_cast<size_t>(j)]);
    } else {
        s.images[0] = poly_add(variable(1, k), variable(2, k));
    }
    return s;
}

LinearSubstitution p_map(int i, const std::vector<int>& I, int k) {
    if (k < 2 || i < 1 || i > k) throw std::invalid_argument("p_map: need 1 <= i <= k, k >= 2");
    if (I.empty()) throw std::invalid_argument("p_map: I must be nonempty");
    for (int u : I)
        if (u <= i || u > k) throw std::invalid_argument("p_map: I must lie in {i+1..k}");
    LinearSubstitution s;
    s.src_k = k;
    s.dst_k = k - 1;
    for (int t = 1; t <= k; ++t) {
        if (t < i) {
            s.images.push_back(variable(t, k - 1));
        } else if (t == i) {
            Polynomial sum(k - 1);
            for (int u : I) sum = poly_add(sum, variable(u - 1, k - 1));
            s.images.push_back(sum);
        } else {
            s.images.push_back(variable(t - 1, k - 1));
        }
    }
    return s;
}

Polynomial apply_substitution(const LinearSubstitution& s, const Polynomial& f) {
    if (f.k() != s.src_k)
        throw std::invalid_argument("apply_substitution: variable count mismatch");
    Polynomial out(s.dst_k);
    for (const auto& m : f.terms()) {
        Polynomial prod(s.dst_k);
        prod.toggle(Monomial(std::vector<uint32_t>(static_cast<size_t>(s.dst_k), 0)));
        for (int i = 0; i < s.src_k; ++i)
            if (m[i]) prod = poly_mul(prod, poly_pow(s.images[static_cast<size_t>(i)], m[i]));
        out = poly_add(out, prod);
    }
    return out;
}

F2Matrix action_matrix(const LinearSubstitution& s, const QuotientBasis& src,
                       const QuotientBasis& dst) {
    if (s.src_k != src.k || s.dst_k != dst.k || src.d != dst.d)
        throw std::invalid_argument("action_matrix: shape mismatch");
    F2Matrix m(src.dim());
    m.rows.assign(dst.dim(), BitVector(src.dim()));
    for (size_t t = 0; t < src.dim(); ++t) {
        Polynomial image = apply_substitution(s, Polynomial(src.admissible_monomial(t)));
        ClassCoordinates cc = reduce_class(image, dst);
        for (size_t i = 0; i < dst.dim(); ++i)
            if (cc.bits.get(i)) m.rows[i].set(t);
    }
    return m;
}

std::vector<BitVector> invariant_subspace(const QuotientBasis& qb,
                                          const std::vector<LinearSubstitution>& gens) {
    std::vector<F2Matrix> constraints;
    for (const auto& s : gens) {
        F2Matrix m = action_matrix(s, qb, qb);
        for (size_t t = 0; t < qb.dim(); ++t) m.rows[t].toggle(t);  // M + I
        constraints.push_back(std::move(m));
    }
    if (constraints.empty()) {
        // No constraints: the whole space is fixed.
        std::vector<BitVector> all;
        for (size_t t = 0; t < qb.dim(); ++t) {
            BitVector e(qb.dim());
            e.set(t);
            all.push_back(std::move(e));
        }
        return all;
    }
    return kernel(stack(constraints));
}

std::vector<BitVector> sigma_invariants(const QuotientBasis& qb) {
    std::vector<LinearSubstitution> gens;
    for (int j = 1; j < qb.k; ++j) gens.push_back(rho(j, qb.k));
    return invariant_subspace(qb, gens);
}

std::vector<BitVector> gl_invariants(const QuotientBasis& qb) {
    std::vector<LinearSubstitution> gens;
    for (int j = 1; j <= qb.k; ++j) gens.push_back(rho(j, qb.k));
    if (qb.k == 1) gens.clear();  // GL_1 over F2 is trivial
    return invariant_subspace(qb, gens);
}

SFTildeResult sf_tilde(int k, uint64_t d, const WeightVector& w) {
    if (k < 2) throw std::invalid_argument("sf_tilde: need k >= 2");
    SFTildeResult res;
    res.k = k;
    res.d = d;
    res.weight = w;

    QuotientBasis qb = weight_quotient_basis(k, d, w);
    std::vector<size_t> plus_pos;  // positions within qb.admissible
    for (size_t t = 0; t < qb.dim(); ++t) {
        const Monomial& m = qb.admissible_monomial(t);
        if (std::all_of(m.exponents.begin(), m.exponents.end(),
                        [](uint32_t e) { return e > 0; })) {
            plus_pos.push_back(t);
            res.bplus.push_back(m);
        }
    }

    // If w does not occur in degree d for k-1 variables, every image already
    // vanishes in the subquotient and there are no constraints.
    std::optional<QuotientBasis> dst;
    try {
        dst = weight_quotient_basis(k - 1, d, w);
    } catch (const std::invalid_argument&) {
    }

    F2Matrix constraints(plus_pos.size());
    if (dst) {
        for (int i = 1; i <= k; ++i) {
            // Nonempty subsets of {i+1, ..., k}.
            int nfree = k - i;
            for (int mask = 1; mask < (1 << nfree); ++mask) {
                std::vector<int> I;
                for (int b = 0; b < nfree; ++b)
                    if (mask & (1 << b)) I.push_back(i + 1 + b);
                LinearSubstitution s = p_map(i, I, k);
                std::vector<BitVector> rows(dst->dim(), BitVector(plus_pos.size()));
                for (size_t c = 0; c < plus_pos.size(); ++c) {
                    Polynomial image =
                        apply_substitution(s, Polynomial(qb.admissible_monomial(plus_pos[c])));
                    ClassCoordinates cc = reduce_class(image, *dst);
                    for (size_t r = 0; r < dst->dim(); ++r)
                        if (cc.bits.get(r)) rows[r].set(c);
                }
                for (auto& r : rows)
                    if (!r.is_zero()) constraints.rows.push_back(std::move(r));
            }
        }
    }

    if (constraints.rows.empty()) {
        for (size_t c = 0; c < plus_pos.size(); ++c) {
            BitVector e(plus_pos.size());
            e.set(c);
            res.basis.push_back(std::move(e));
        }
    } else {
        res.basis = kernel(constraints);
    }
    return res;
}

}  // namespace hitprob
