#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hitprob {

/// Exponent vector of a monomial x1^a1 ... xk^ak in F2[x1..xk].
struct Monomial {
    std::vector<uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> e) : exponents(std::move(e)) {}

    int k() const { return static_cast<int>(exponents.size()); }
    uint32_t operator[](int i) const { return exponents[static_cast<size_t>(i)]; }

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;  // container order, not the monomial order
};

/// Per-bit-position variable counts (w1, w2, ...), trailing zeros trimmed.
using WeightVector = std::vector<uint32_t>;

uint64_t degree(const Monomial& m);

WeightVector weight_vector(const Monomial& m);

uint64_t weight_degree(const WeightVector& w);

/// Left-lexicographic comparison on entries, shorter side padded with zeros.
int compare_weights(const WeightVector& a, const WeightVector& b);

/// Least r such that n is a sum of r integers of the form 2^s - 1 (0 for n = 0).
int mu(uint64_t n);

/// True iff every nonzero exponent is of the form 2^s - 1.
bool is_spike(const Monomial& m);

/// The minimal spike of degree d in at most k variables, exponents sorted
/// nonincreasing. Throws if mu(d) > k.
Monomial minimal_spike(int k, uint64_t d);

/// Text form `x1^3 x2 x5^12`; the constant monomial prints as `1`.
std::string to_string(const Monomial& m);
/// Tuple form `[3,1,0,0,12]`.
std::string to_tuple_string(const Monomial& m);

/// Parses either the text form or the tuple form; k fixes the variable count.
Monomial parse_monomial(const std::string& s, int k);

}  // namespace hitprob
