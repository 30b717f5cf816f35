#include "hitprob/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hitprob/equivariance.hpp"
#include "hitprob/solver.hpp"
#include "hitprob/steenrod.hpp"

namespace hitprob {

namespace {

struct MissingFixture {
    std::string name;
};

const Fixture& req(const std::map<std::string, Fixture>& fx, const std::string& name) {
    auto it = fx.find(name);
    if (it == fx.end()) throw MissingFixture{name};
    return it->second;
}

std::string weight_str(const WeightVector& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

// Each check returns (ok, computed-value string).
using CheckFn = std::function<std::pair<bool, std::string>()>;

struct Runner {
    const std::map<std::string, Fixture>& fx;
    std::vector<VerificationResult> results;

    void check(const std::string& name, const std::string& expected, const CheckFn& fn) {
        VerificationResult r;
        r.name = name;
        r.expected = expected;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [ok, computed] = fn();
            r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            r.computed = computed;
        } catch (const MissingFixture& m) {
            r.status = CheckStatus::Skipped;
            r.computed = "missing fixture '" + m.name + "'";
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.computed = std::string("error: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
                .count();
        results.push_back(std::move(r));
    }
};

EchelonSpace span_of(const std::vector<BitVector>& vecs, size_t n) {
    EchelonSpace es(n);
    for (const auto& v : vecs) es.insert(v);
    return es;
}

std::pair<bool, std::string> monomial_set_equal(std::vector<Monomial> a,
                                                std::vector<Monomial> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return {true, std::to_string(a.size()) + " monomials, sets equal"};
    for (const auto& m : a)
        if (!std::binary_search(b.begin(), b.end(), m))
            return {false, "computed extra monomial " + to_string(m)};
    for (const auto& m : b)
        if (!std::binary_search(a.begin(), a.end(), m))
            return {false, "computed misses monomial " + to_string(m)};
    return {false, "size mismatch"};
}

// Dimension of the invariant space plus span membership of named fixtures.
std::pair<bool, std::string> span_check(const QuotientBasis& qb,
                                        const std::vector<BitVector>& inv, size_t want_dim,
                                        const std::map<std::string, Fixture>& fx,
                                        const std::vector<std::string>& names) {
    if (inv.size() != want_dim)
        return {false, "dim " + std::to_string(inv.size())};
    EchelonSpace span = span_of(inv, qb.dim());
    for (const auto& name : names) {
        ClassCoordinates cc = reduce_class(req(fx, name).polynomial(), qb);
        if (!span.contains(cc.bits)) return {false, "[" + name + "] not in computed span"};
        if (cc.bits.is_zero()) return {false, "[" + name + "] reduces to zero"};
    }
    std::string s = "dim " + std::to_string(inv.size());
    if (!names.empty()) s += ", " + std::to_string(names.size()) + " fixtures in span";
    return {true, s};
}

std::vector<std::pair<int, std::vector<int>>> n_k_pairs(int k) {
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int i = 1; i <= k; ++i) {
        int nfree = k - i;
        for (int mask = 1; mask < (1 << nfree); ++mask) {
            std::vector<int> I;
            for (int b = 0; b < nfree; ++b)
                if (mask & (1 << b)) I.push_back(i + 1 + b);
            out.emplace_back(i, std::move(I));
        }
    }
    return out;
}

std::pair<bool, std::string> certificates(const Polynomial& f, const QuotientBasis& qb) {
    for (int j = 1; j <= qb.k; ++j) {
        Polynomial moved = poly_add(apply_substitution(rho(j, qb.k), f), f);
        if (!reduce_class(moved, qb).bits.is_zero())
            return {false, "rho_" + std::to_string(j) + " does not fix the class"};
    }
    return {true, "fixed by rho_1..rho_" + std::to_string(qb.k)};
}

std::pair<bool, std::string> singer_soundness(int k, uint64_t d) {
    auto table = get_table(k, d, MonomialOrder::WeightLex);
    auto hs = hit_space(k, d);
    WeightVector spike_w = weight_vector(minimal_spike(k, d));
    size_t checked = 0;
    for (size_t c = 0; c < table->size(); ++c) {
        const Monomial& m = table->monomial(c);
        if (compare_weights(weight_vector(m), spike_w) >= 0) break;  // wlex: block is a prefix
        ++checked;
        BitVector e(table->size());
        e.set(c);
        if (!hs->contains(e))
            return {false, "filtered monomial " + to_string(m) + " is not hit"};
    }
    return {true, std::to_string(checked) + " filtered monomials all hit"};
}

Monomial random_monomial(std::mt19937& rng, int k, uint64_t d) {
    std::vector<uint32_t> e(static_cast<size_t>(k), 0);
    for (uint64_t i = 0; i < d; ++i)
        e[rng() % static_cast<uint32_t>(k)] += 1;
    return Monomial(std::move(e));
}

Polynomial random_poly(std::mt19937& rng, int k, uint64_t d) {
    Polynomial f(k);
    size_t nterms = 1 + rng() % 4;
    for (size_t i = 0; i < nterms; ++i) f.toggle(random_monomial(rng, k, d));
    if (f.is_zero()) f.toggle(random_monomial(rng, k, d));
    return f;
}

void suite_smoke(Runner& r) {
    r.check("hit-space oracle k<=3 d<=10", "span(Sq^2^s) = span(all Sq^j)", [] {
        for (int k = 1; k <= 3; ++k)
            for (uint64_t d = 1; d <= 10; ++d) {
                auto table = get_table(k, d, MonomialOrder::WeightLex);
                EchelonSpace all(table->size());
                for (uint64_t j = 1; j < d; ++j)
                    for (const Monomial& m : enumerate_monomials(k, d - j)) {
                        Polynomial img = sq_monomial(static_cast<uint32_t>(j), m);
                        if (!img.is_zero()) all.insert(to_bits(img, *table));
                    }
                auto hs = hit_space(k, d);
                if (all.rank() != hs->rank())
                    return std::make_pair(false, "rank mismatch at k=" + std::to_string(k) +
                                                     " d=" + std::to_string(d));
            }
        return std::make_pair(true, std::string("30 (k,d) pairs agree"));
    });
    r.check("order independence k<=3 d<=10", "dim identical under wlex and lex", [] {
        for (int k = 1; k <= 3; ++k)
            for (uint64_t d = 1; d <= 10; ++d) {
                size_t a = admissible_basis(k, d, MonomialOrder::WeightLex).dim();
                size_t b = admissible_basis(k, d, MonomialOrder::Lex).dim();
                if (a != b)
                    return std::make_pair(false, "k=" + std::to_string(k) +
                                                     " d=" + std::to_string(d) + ": " +
                                                     std::to_string(a) + " vs " +
                                                     std::to_string(b));
            }
        return std::make_pair(true, std::string("30 (k,d) pairs agree"));
    });
}

void suite_degree20(Runner& r) {
    const auto& fx = r.fx;
    r.check("dim QP4_20", "55", [] {
        size_t dim = admissible_basis(4, 20).dim();
        return std::make_pair(dim == 55, std::to_string(dim));
    });
    r.check("B4(20) matches fixture", "set equality, 55 monomials", [&fx] {
        QuotientBasis qb = admissible_basis(4, 20);
        std::vector<Monomial> computed;
        for (uint32_t c : qb.admissible) computed.push_back(qb.table->monomial(c));
        return monomial_set_equal(std::move(computed), req(fx, "B4_20").monomials);
    });
    r.check("dim QP5_20", "641", [] {
        size_t dim = admissible_basis(5, 20).dim();
        return std::make_pair(dim == 641, std::to_string(dim));
    });
    r.check("weights of B5(20)", "(4,2,1,1) (4,2,3) (4,4,2)", [] {
        QuotientBasis qb = admissible_basis(5, 20);
        std::set<WeightVector> seen;
        for (uint32_t c : qb.admissible) seen.insert(weight_vector(qb.table->monomial(c)));
        std::string s;
        for (const auto& w : seen) s += (s.empty() ? "" : " ") + weight_str(w);
        bool ok = seen == std::set<WeightVector>{{4, 2, 1, 1}, {4, 2, 3}, {4, 4, 2}};
        return std::make_pair(ok, s);
    });

    const std::vector<std::pair<WeightVector, size_t>> weight_dims = {
        {{4, 2, 1, 1}, 450}, {{4, 2, 3}, 70}, {{4, 4, 2}, 121}};
    for (const auto& [w, want] : weight_dims)
        r.check("dim QP5_20" + weight_str(w), std::to_string(want), [w, want] {
            size_t dim = weight_quotient_basis(5, 20, w).dim();
            return std::make_pair(dim == want, std::to_string(dim));
        });

    const std::vector<std::tuple<WeightVector, size_t, size_t, std::string>> splits = {
        {{4, 2, 1, 1}, 225, 225, "B5_plus_20_w4211"},
        {{4, 2, 3}, 20, 50, "B5_plus_20_w423"},
        {{4, 4, 2}, 30, 91, "B5_plus_20_w442"}};
    for (const auto& [w, b0, bp, fixture] : splits) {
        r.check("|B0| QP5_20" + weight_str(w), std::to_string(b0), [w, b0 = b0] {
            auto [z, p] = split_B0_plus(weight_quotient_basis(5, 20, w));
            return std::make_pair(z.size() == b0, std::to_string(z.size()));
        });
        r.check("B5+(20)" + weight_str(w) + " matches fixture",
                "set equality, " + std::to_string(bp) + " monomials", [&fx, w, fixture = fixture] {
                    auto [z, p] = split_B0_plus(weight_quotient_basis(5, 20, w));
                    return monomial_set_equal(std::move(p), req(fx, fixture).monomials);
                });
    }
    r.check("|B5^0(20)|", "275", [] {
        auto [z, p] = split_B0_plus(admissible_basis(5, 20));
        return std::make_pair(z.size() == 275, std::to_string(z.size()));
    });

    const std::vector<std::pair<WeightVector, std::vector<std::string>>> sigma20 = {
        {{4, 2, 1, 1}, {"h1", "h2", "h3", "h4", "h5", "h6", "h7"}},
        {{4, 2, 3}, {"h8", "h9", "h10"}},
        {{4, 4, 2}, {"h11", "h12", "h13"}}};
    for (const auto& [w, names] : sigma20)
        r.check("Sigma5 invariants QP5_20" + weight_str(w),
                "dim " + std::to_string(names.size()) + ", span of fixtures",
                [&fx, w, names = names] {
                    QuotientBasis qb = weight_quotient_basis(5, 20, w);
                    return span_check(qb, sigma_invariants(qb), names.size(), fx, names);
                });

    const std::vector<std::tuple<WeightVector, size_t, std::vector<std::string>>> gl20 = {
        {{4, 2, 1, 1}, 0, {}}, {{4, 2, 3}, 1, {"h10"}}, {{4, 4, 2}, 0, {}}};
    for (const auto& [w, want, names] : gl20)
        r.check("GL5 invariants QP5_20" + weight_str(w), "dim " + std::to_string(want),
                [&fx, w, want = want, names = names] {
                    QuotientBasis qb = weight_quotient_basis(5, 20, w);
                    return span_check(qb, gl_invariants(qb), want, fx, names);
                });

    r.check("GL5 invariants QP5_20", "dim 1, span of [p]", [&fx] {
        QuotientBasis qb = admissible_basis(5, 20);
        return span_check(qb, gl_invariants(qb), 1, fx, {"p"});
    });
    r.check("invariance certificates for p", "rho_j(p) = p in QP5_20 for all j", [&fx] {
        return certificates(req(fx, "p").polynomial(), admissible_basis(5, 20));
    });

    const std::vector<std::tuple<WeightVector, size_t, std::vector<std::string>>> sft = {
        {{4, 2, 1, 1}, 10, {"g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9", "g10"}},
        {{4, 2, 3}, 1, {"g11"}},
        {{4, 4, 2}, 0, {}}};
    for (const auto& [w, want, names] : sft)
        r.check("SF~5" + weight_str(w), "dim " + std::to_string(want),
                [&fx, w, want = want, names = names] {
                    SFTildeResult res = sf_tilde(5, 20, w);
                    if (res.basis.size() != want)
                        return std::make_pair(false, "dim " + std::to_string(res.basis.size()));
                    QuotientBasis qb = weight_quotient_basis(5, 20, w);
                    // B+ positions within the admissible list, in order.
                    std::vector<int32_t> plus_of(qb.dim(), -1);
                    size_t next = 0;
                    for (size_t t = 0; t < qb.dim(); ++t)
                        if (next < res.bplus.size() &&
                            qb.admissible_monomial(t) == res.bplus[next])
                            plus_of[t] = static_cast<int32_t>(next++);
                    EchelonSpace span = span_of(res.basis, res.bplus.size());
                    for (const auto& name : names) {
                        ClassCoordinates cc = reduce_class(req(fx, name).polynomial(), qb);
                        BitVector v(res.bplus.size());
                        for (size_t t = 0; t < qb.dim(); ++t)
                            if (cc.bits.get(t)) {
                                if (plus_of[t] < 0)
                                    return std::make_pair(
                                        false, "[" + name + "] has support off B+");
                                v.set(static_cast<size_t>(plus_of[t]));
                            }
                        if (v.is_zero())
                            return std::make_pair(false, "[" + name + "] reduces to zero");
                        if (!span.contains(v))
                            return std::make_pair(false,
                                                  "[" + name + "] not in computed span");
                    }
                    return std::make_pair(true, "dim " + std::to_string(want));
                });

    r.check("p_(i;I) vanishing for g1..g10 in P4", "all 10 x 26 images hit", [&fx] {
        auto table4 = get_table(4, 20, MonomialOrder::WeightLex);
        auto hs4 = hit_space(4, 20);
        for (int u = 1; u <= 10; ++u) {
            Polynomial g = req(fx, "g" + std::to_string(u)).polynomial();
            for (const auto& [i, I] : n_k_pairs(5)) {
                Polynomial img = apply_substitution(p_map(i, I, 5), g);
                if (!img.is_zero() && !hs4->contains(to_bits(img, *table4)))
                    return std::make_pair(false, "p_(" + std::to_string(i) + ";I)(g" +
                                                     std::to_string(u) + ") not hit");
            }
        }
        return std::make_pair(true, std::string("all 260 certificates pass"));
    });
    r.check("p_(i;I)(g11) vanishes mod weight (4,2,3) in P4", "26 images zero", [&fx] {
        Polynomial g = req(fx, "g11").polynomial();
        QuotientBasis qb4 = weight_quotient_basis(4, 20, {4, 2, 3});
        for (const auto& [i, I] : n_k_pairs(5)) {
            Polynomial img = apply_substitution(p_map(i, I, 5), g);
            if (!reduce_class(img, qb4).bits.is_zero())
                return std::make_pair(false,
                                      "p_(" + std::to_string(i) + ";I)(g11) nonzero");
        }
        return std::make_pair(true, std::string("all 26 certificates pass"));
    });
    r.check("h0 + g11 + p is hit", "reduces to zero in QP5_20", [&fx] {
        Polynomial sum = poly_add(poly_add(req(fx, "h0").polynomial(),
                                           req(fx, "g11").polynomial()),
                                  req(fx, "p").polynomial());
        bool ok = reduce_class(sum, admissible_basis(5, 20)).bits.is_zero();
        return std::make_pair(ok, std::string(ok ? "zero" : "nonzero"));
    });
}

void suite_degree30(Runner& r) {
    const auto& fx = r.fx;
    r.check("dim QP5_30", "840", [] {
        size_t dim = admissible_basis(5, 30).dim();
        return std::make_pair(dim == 840, std::to_string(dim));
    });
    r.check("weights of B5(30)", "(2,2,2,2) (2,4,3,1) (4,3,3,1)", [] {
        QuotientBasis qb = admissible_basis(5, 30);
        std::set<WeightVector> seen;
        for (uint32_t c : qb.admissible) seen.insert(weight_vector(qb.table->monomial(c)));
        std::string s;
        for (const auto& w : seen) s += (s.empty() ? "" : " ") + weight_str(w);
        bool ok = seen == std::set<WeightVector>{{2, 2, 2, 2}, {2, 4, 3, 1}, {4, 3, 3, 1}};
        return std::make_pair(ok, s);
    });
    r.check("dim QP5_30(2,4,3,1)", "1, basis {x1^3 x2^5 x3^6 x4^6 x5^10}", [] {
        QuotientBasis qb = weight_quotient_basis(5, 30, {2, 4, 3, 1});
        if (qb.dim() != 1) return std::make_pair(false, "dim " + std::to_string(qb.dim()));
        Monomial want({3, 5, 6, 6, 10});
        const Monomial& got = qb.admissible_monomial(0);
        return std::make_pair(got == want, "1, basis {" + to_string(got) + "}");
    });
    r.check("Sigma5 invariants QP5_30(2,2,2,2)", "dim 9, span of p1..p9", [&fx] {
        QuotientBasis qb = weight_quotient_basis(5, 30, {2, 2, 2, 2});
        std::vector<std::string> names;
        for (int s = 1; s <= 9; ++s) names.push_back("p" + std::to_string(s));
        return span_check(qb, sigma_invariants(qb), 9, fx, names);
    });
    r.check("GL5 invariants QP5_30", "dim 1, span of [q]", [&fx] {
        QuotientBasis qb = admissible_basis(5, 30);
        return span_check(qb, gl_invariants(qb), 1, fx, {"q"});
    });
    r.check("invariance certificates for q", "rho_j(q) = q in QP5_30 for all j", [&fx] {
        return certificates(req(fx, "q").polynomial(), admissible_basis(5, 30));
    });
    r.check("GL5 invariants QP5_30(4,3,3,1)", "dim 0", [&fx] {
        QuotientBasis qb = weight_quotient_basis(5, 30, {4, 3, 3, 1});
        return span_check(qb, gl_invariants(qb), 0, fx, {});
    });
}

void suite_properties(Runner& r) {
    r.check("Sq properties on 1000 random cases", "Cartan, unstability, squaring law", [] {
        std::mt19937 rng(20260826);
        for (int it = 0; it < 1000; ++it) {
            int k = 1 + static_cast<int>(rng() % 4);
            uint64_t da = 1 + rng() % 4, db = 1 + rng() % 4;  // product degree <= 8
            Polynomial f = random_poly(rng, k, da), g = random_poly(rng, k, db);
            uint32_t j = rng() % 10;
            Polynomial lhs = sq(j, poly_mul(f, g));
            Polynomial rhs(k);
            for (uint32_t i = 0; i <= j; ++i)
                rhs = poly_add(rhs, poly_mul(sq(i, f), sq(j - i, g)));
            if (lhs != rhs) return std::make_pair(false, "Cartan fails: " + to_string(f));
            if (!sq(static_cast<uint32_t>(da) + 1 + rng() % 4, f).is_zero())
                return std::make_pair(false, "unstability fails: " + to_string(f));
            if (sq(static_cast<uint32_t>(da), f) != poly_mul(f, f))
                return std::make_pair(false, "squaring law fails: " + to_string(f));
        }
        return std::make_pair(true, std::string("1000 cases pass"));
    });
    r.check("Sq commutes with substitutions on 500 random cases", "apply o Sq = Sq o apply",
            [] {
                std::mt19937 rng(433494437);
                for (int it = 0; it < 500; ++it) {
                    int k = 1 + static_cast<int>(rng() % 4);
                    LinearSubstitution s;
                    s.src_k = s.dst_k = k;
                    for (int i = 0; i < k; ++i) {
                        Polynomial row(k);
                        for (int c = 0; c < k; ++c)
                            if (rng() & 1) {
                                std::vector<uint32_t> e(static_cast<size_t>(k), 0);
                                e[static_cast<size_t>(c)] = 1;
                                row.toggle(Monomial(std::move(e)));
                            }
                        s.images.push_back(row);
                    }
                    Polynomial f = random_poly(rng, k, 1 + rng() % 8);
                    uint32_t j = rng() % 9;
                    if (apply_substitution(s, sq(j, f)) != sq(j, apply_substitution(s, f)))
                        return std::make_pair(false, "case " + std::to_string(it) + ": " +
                                                         to_string(f));
                }
                return std::make_pair(true, std::string("500 cases pass"));
            });
    r.check("Singer filter soundness at (5,20)", "every filtered monomial is hit",
            [] { return singer_soundness(5, 20); });
    r.check("Singer filter soundness at (5,30)", "every filtered monomial is hit",
            [] { return singer_soundness(5, 30); });
}

}  // namespace

std::vector<VerificationResult> run_suite(const std::string& suite,
                                          const std::map<std::string, Fixture>& fixtures) {
    Runner r{fixtures, {}};
    if (suite == "smoke") suite_smoke(r);
    else if (suite == "degree20") suite_degree20(r);
    else if (suite == "degree30") suite_degree30(r);
    else if (suite == "properties") suite_properties(r);
    else if (suite == "all") {
        suite_smoke(r);
        suite_degree20(r);
        suite_degree30(r);
        suite_properties(r);
    } else {
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (smoke, degree20, degree30, properties, all)");
    }
    return std::move(r.results);
}

std::string render_report(const std::vector<VerificationResult>& results, bool json) {
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name},
                           {"status", r.status == CheckStatus::Pass     ? "pass"
                                      : r.status == CheckStatus::Fail ? "fail"
                                                                        : "skipped"},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"elapsed_ms", static_cast<int64_t>(r.elapsed_ms)}});
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.name << " = " << r.computed << " (expected " << r.expected << ") ["
           << (r.status == CheckStatus::Pass     ? "pass"
               : r.status == CheckStatus::Fail ? "FAIL"
                                                 : "skipped")
           << ", " << static_cast<int64_t>(r.elapsed_ms) << " ms]\n";
    }
    return os.str();
}

bool all_passed(const std::vector<VerificationResult>& results) {
    for (const auto& r : results)
        if (r.status != CheckStatus::Pass) return false;
    return true;
}

}  // namespace hitprob
