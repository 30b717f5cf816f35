#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hitprob/equivariance.hpp"
#include "hitprob/fixtures.hpp"
#include "hitprob/solver.hpp"
#include "hitprob/steenrod.hpp"
#include "hitprob/verify.hpp"

using nlohmann::json;
using namespace hitprob;

namespace {

struct Options {
    std::string format = "text";
    std::string cache;
    std::string fixtures = "data/fixtures.txt";
    std::string order = "wlex";

    bool json_out() const { return format == "json"; }
    MonomialOrder ord() const {
        return order == "lex" ? MonomialOrder::Lex : MonomialOrder::WeightLex;
    }
};

WeightVector parse_weight_arg(const std::string& s) {
    WeightVector w;
    std::string part;
    std::istringstream is(s);
    while (std::getline(is, part, ',')) w.push_back(static_cast<uint32_t>(std::stoul(part)));
    if (w.empty()) throw std::invalid_argument("empty weight");
    return w;
}

json weight_json(const WeightVector& w) {
    json a = json::array();
    for (uint32_t x : w) a.push_back(x);
    return a;
}

json monomial_json(const Monomial& m) {
    json a = json::array();
    for (uint32_t e : m.exponents) a.push_back(e);
    return a;
}

std::string weight_text(const WeightVector& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

QuotientBasis make_basis(int k, uint64_t d, const std::string& weight, MonomialOrder ord) {
    if (weight.empty()) return admissible_basis(k, d, ord);
    return weight_quotient_basis(k, d, parse_weight_arg(weight), ord);
}

void print_classes(const Options& opt, const QuotientBasis& qb,
                   const std::vector<BitVector>& basis, const std::string& label) {
    std::vector<Polynomial> reps;
    for (const auto& v : basis) {
        ClassCoordinates cc;
        cc.basis = &qb;
        cc.bits = v;
        reps.push_back(cc.representative());
    }
    if (opt.json_out()) {
        json out = {{"k", qb.k}, {"d", qb.d}, {"space", label}, {"dim", basis.size()}};
        if (qb.weight) out["weight"] = weight_json(*qb.weight);
        json rl = json::array();
        for (const auto& r : reps) rl.push_back(to_string(r));
        out["representatives"] = rl;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "dim " << label << " = " << basis.size() << "\n";
        for (size_t i = 0; i < reps.size(); ++i)
            std::cout << "  [" << i + 1 << "] " << to_string(reps[i]) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steenrod hit problem workbench over F2"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("HITPROB_CACHE")) opt.cache = env;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", opt.cache, "Basis cache directory (default $HITPROB_CACHE)");
    app.add_option("--fixtures", opt.fixtures, "Fixture file path");
    app.add_option("--order", opt.order, "Monomial order")
        ->check(CLI::IsMember({"wlex", "lex"}));

    int k = 0;
    uint64_t d = 0;
    std::string weight, poly, group = "gl", suite = "smoke";
    uint32_t j = 0;
    bool plus_only = false;

    auto* c_basis = app.add_subcommand("basis", "Admissible monomial basis of (QP_k)_d");
    c_basis->add_option("--k", k)->required();
    c_basis->add_option("--d", d)->required();
    c_basis->add_option("--weight", weight, "Restrict to one weight vector a,b,c");
    c_basis->add_flag("--plus", plus_only, "Only monomials divisible by every variable");

    auto* c_dim = app.add_subcommand("dim", "Dimension of (QP_k)_d or a weight subquotient");
    c_dim->add_option("--k", k)->required();
    c_dim->add_option("--d", d)->required();
    c_dim->add_option("--weight", weight);

    auto* c_weights = app.add_subcommand("weights", "Weights occurring in the degree");
    c_weights->add_option("--k", k)->required();
    c_weights->add_option("--d", d)->required();

    auto* c_sq = app.add_subcommand("sq", "Apply a Steenrod square to a polynomial");
    c_sq->add_option("--k", k)->required();
    c_sq->add_option("--j", j)->required();
    c_sq->add_option("--poly", poly)->required();

    auto* c_reduce = app.add_subcommand("reduce", "Reduce a polynomial to admissible form");
    c_reduce->add_option("--k", k)->required();
    c_reduce->add_option("--poly", poly)->required();
    c_reduce->add_option("--weight", weight);

    auto* c_inv = app.add_subcommand("invariants", "Sigma_k- or GL_k-invariant classes");
    c_inv->add_option("--k", k)->required();
    c_inv->add_option("--d", d)->required();
    c_inv->add_option("--group", group)->check(CLI::IsMember({"gl", "sigma"}));
    c_inv->add_option("--weight", weight);

    auto* c_sft = app.add_subcommand("sftilde", "The space SF~_k(w)");
    c_sft->add_option("--k", k)->required();
    c_sft->add_option("--weight", weight)->required();

    auto* c_rank = app.add_subcommand("rank", "Rank of the hit subspace in degree d");
    c_rank->add_option("--k", k)->required();
    c_rank->add_option("--d", d)->required();

    auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
    c_verify->add_option("--suite", suite, "smoke, degree20, degree30, properties, all");

    // global flags may appear after the subcommand, as in `basis --k 5 --format json`
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_cache_dir(opt.cache);
    try {
        if (*c_basis) {
            QuotientBasis qb = make_basis(k, d, weight, opt.ord());
            std::vector<Monomial> monos;
            for (uint32_t c : qb.admissible) monos.push_back(qb.table->monomial(c));
            if (plus_only) {
                auto [b0, bp] = split_B0_plus(qb);
                monos = std::move(bp);
            }
            if (opt.json_out()) {
                json out = {{"k", k}, {"d", d}, {"dim", monos.size()}};
                if (qb.weight) out["weight"] = weight_json(*qb.weight);
                json ml = json::array();
                for (const auto& m : monos) ml.push_back(monomial_json(m));
                out["monomials"] = ml;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "dim = " << monos.size() << "\n";
                for (const auto& m : monos) std::cout << to_tuple_string(m) << "\n";
            }
        } else if (*c_dim) {
            QuotientBasis qb = make_basis(k, d, weight, opt.ord());
            if (opt.json_out()) {
                json out = {{"k", k}, {"d", d}, {"dim", qb.dim()}};
                if (qb.weight) out["weight"] = weight_json(*qb.weight);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << qb.dim() << "\n";
            }
        } else if (*c_weights) {
            QuotientBasis qb = admissible_basis(k, d, opt.ord());
            std::map<WeightVector, size_t> dims;
            for (uint32_t c : qb.admissible) ++dims[weight_vector(qb.table->monomial(c))];
            if (opt.json_out()) {
                json out = {{"k", k}, {"d", d}, {"weights", json::array()}};
                for (const auto& [w, n] : dims)
                    out["weights"].push_back({{"weight", weight_json(w)}, {"dim", n}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [w, n] : dims)
                    std::cout << weight_text(w) << " dim " << n << "\n";
            }
        } else if (*c_sq) {
            Polynomial f = parse_polynomial(poly, k);
            Polynomial img = sq(j, f);
            if (opt.json_out()) {
                json out = {{"k", k}, {"j", j}, {"result", to_string(img)}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << to_string(img) << "\n";
            }
        } else if (*c_reduce) {
            Polynomial f = parse_polynomial(poly, k);
            if (f.is_zero()) throw std::invalid_argument("reduce: zero polynomial");
            QuotientBasis qb = make_basis(k, f.degree(), weight, opt.ord());
            ClassCoordinates cc = reduce_class(f, qb);
            Polynomial rep = cc.representative();
            if (opt.json_out()) {
                json out = {{"k", k},
                            {"d", qb.d},
                            {"reduced", to_string(rep)},
                            {"is_hit", rep.is_zero()}};
                if (qb.weight) out["weight"] = weight_json(*qb.weight);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << to_string(rep) << "\n";
            }
        } else if (*c_inv) {
            QuotientBasis qb = make_basis(k, d, weight, opt.ord());
            auto inv = group == "sigma" ? sigma_invariants(qb) : gl_invariants(qb);
            print_classes(opt, qb,  inv,
                          (group == "sigma" ? "Sigma" : "GL") + std::to_string(k) +
                              "-invariants");
        } else if (*c_sft) {
            WeightVector w = parse_weight_arg(weight);
            SFTildeResult res = sf_tilde(k, weight_degree(w), w);
            if (opt.json_out()) {
                json out = {{"k", k},
                            {"d", res.d},
                            {"weight", weight_json(w)},
                            {"dim", res.basis.size()}};
                json rl = json::array();
                for (const auto& v : res.basis) {
                    Polynomial p(k);
                    for (size_t t = 0; t < v.size(); ++t)
                        if (v.get(t)) p.toggle(res.bplus[t]);
                    rl.push_back(to_string(p));
                }
                out["representatives"] = rl;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "dim SF~_" << k << weight_text(w) << " = " << res.basis.size()
                          << "\n";
                for (const auto& v : res.basis) {
                    Polynomial p(k);
                    for (size_t t = 0; t < v.size(); ++t)
                        if (v.get(t)) p.toggle(res.bplus[t]);
                    std::cout << "  " << to_string(p) << "\n";
                }
            }
        } else if (*c_rank) {
            auto table = get_table(k, d, opt.ord());
            auto hs = hit_space(k, d, opt.ord());
            if (opt.json_out()) {
                json out = {{"k", k},
                            {"d", d},
                            {"monomials", table->size()},
                            {"rank", hs->rank()},
                            {"dim", table->size() - hs->rank()}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "monomials = " << table->size() << ", hit rank = " << hs->rank()
                          << ", dim = " << table->size() - hs->rank() << "\n";
            }
        } else if (*c_verify) {
            auto fixtures = load_fixtures(opt.fixtures);
            auto results = run_suite(suite, fixtures);
            std::cout << render_report(results, opt.json_out());
            return all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
