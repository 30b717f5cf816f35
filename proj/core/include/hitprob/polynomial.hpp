#pragma once

#include <set>
#include <string>

#include "hitprob/monomial.hpp"

namespace hitprob {

/// F2-linear combination of monomials: a finite set, duplicates cancel.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int k) : k_(k) {}
    explicit Polynomial(const Monomial& m) : k_(m.k()) { terms_.insert(m); }

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::set<Monomial>& terms() const { return terms_; }

    /// XOR-insert: adds the monomial, cancelling an existing duplicate.
    void toggle(const Monomial& m);

    bool is_homogeneous() const;
    /// Common degree of the terms; throws when non-homogeneous or zero.
    uint64_t degree() const;

    bool operator==(const Polynomial&) const = default;

private:
    int k_ = 0;
    std::set<Monomial> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_pow(const Polynomial& f, uint32_t e);

/// Monomials joined by " + "; the zero polynomial prints as "0".
std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(const std::string& s, int k);

}  // namespace hitprob
