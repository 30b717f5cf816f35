#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hitprob/monomial.hpp"
#include "hitprob/polynomial.hpp"

namespace hitprob {

/// One named record from a fixture file: either a polynomial (sum of the
/// listed monomials) or a plain monomial list.
struct Fixture {
    std::string name;
    std::string kind;  // "poly" or "monos"
    int k = 0;
    uint64_t d = 0;
    std::optional<WeightVector> weight;
    std::vector<Monomial> monomials;

    Polynomial polynomial() const;
};

/// Parses a fixture file: records separated by blank lines, each starting
/// with `# name=<id> kind=<poly|monos> k=<k> d=<d> [weight=a,b,c]` followed
/// by one monomial per line in tuple form. Throws with a line number on any
/// malformed content.
std::map<std::string, Fixture> load_fixtures(const std::string& path);

}  // namespace hitprob
