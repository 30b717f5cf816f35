#include "hitprob/steenrod.hpp"

#include <stdexcept>

#include "hitprob/order.hpp"

namespace hitprob {

static void cartan_rec(const Monomial& m, int i, uint32_t remaining, Monomial& img,
                       Polynomial& out) {
    if (i == m.k()) {
        if (remaining == 0) out.toggle(img);
        return;
    }
    uint32_t a = m[i];
    // j_i must satisfy C(a, j_i) odd, i.e. j_i a submask of a, and j_i <= remaining.
    uint32_t sub = a;
    while (true) {
        if (sub <= remaining) {
            img.exponents[static_cast<size_t>(i)] = a + sub;
            cartan_rec(m, i + 1, remaining - sub, img, out);
        }
        if (sub == 0) break;
        sub = (sub - 1) & a;
    }
    img.exponents[static_cast<size_t>(i)] = a;
}

Polynomial sq_monomial(uint32_t j, const Monomial& m) {
    Polynomial out(m.k());
    if (j > degree(m)) return out;  // unstable range
    Monomial img = m;
    cartan_rec(m, 0, j, img, out);
    return out;
}

Polynomial sq(uint32_t j, const Polynomial& f) {
    if (!f.is_homogeneous()) throw std::invalid_argument("sq: non-homogeneous polynomial");
    Polynomial out(f.k());
    for (const auto& m : f.terms()) out = poly_add(out, sq_monomial(j, m));
    return out;
}

HitGeneratorStream::HitGeneratorStream(int k, uint64_t d) : k_(k), d_(d) {
    if (k < 1 || d < 1) throw std::invalid_argument("HitGeneratorStream: need k >= 1, d >= 1");
}

static uint64_t binom(uint64_t n, uint64_t r) {
    if (r > n) return 0;
    uint64_t v = 1;
    for (uint64_t i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

uint64_t HitGeneratorStream::pair_count() const {
    uint64_t total = 0;
    for (uint64_t p = 1; p <= d_; p *= 2)
        total += binom(d_ - p + static_cast<uint64_t>(k_) - 1, static_cast<uint64_t>(k_) - 1);
    return total;
}

void HitGeneratorStream::for_each(
    const std::function<void(uint32_t, const Monomial&, const Polynomial&)>& fn) const {
    for (uint64_t p = 1; p <= d_; p *= 2) {
        uint32_t s = 0;
        while ((uint64_t(1) << (s + 1)) <= p) ++s;
        for (const Monomial& m : enumerate_monomials(k_, d_ - p, MonomialOrder::Lex))
            fn(s, m, sq_monomial(static_cast<uint32_t>(p), m));
    }
}

}  // namespace hitprob
