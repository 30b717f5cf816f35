#include "hitprob/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hitprob {

Polynomial Fixture::polynomial() const {
    Polynomial p(k);
    for (const auto& m : monomials) p.toggle(m);
    return p;
}

static std::runtime_error err(const std::string& path, int line, const std::string& msg) {
    return std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

static WeightVector parse_weight(const std::string& s) {
    WeightVector w;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) w.push_back(static_cast<uint32_t>(std::stoul(part)));
    return w;
}

std::map<std::string, Fixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::map<std::string, Fixture> out;
    std::optional<Fixture> cur;
    std::string line;
    int lineno = 0;

    auto flush = [&] {
        if (!cur) return;
        if (cur->monomials.empty())
            throw err(path, lineno, "record '" + cur->name + "' has no monomials");
        if (!out.emplace(cur->name, std::move(*cur)).second)
            throw err(path, lineno, "duplicate record name '" + cur->name + "'");
        cur.reset();
    };

    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            flush();
            Fixture f;
            std::istringstream is(line.substr(1));
            std::string tok;
            while (is >> tok) {
                size_t eq = tok.find('=');
                if (eq == std::string::npos)
                    throw err(path, lineno, "bad header token '" + tok + "'");
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                try {
                    if (key == "name") f.name = val;
                    else if (key == "kind") f.kind = val;
                    else if (key == "k") f.k = std::stoi(val);
                    else if (key == "d") f.d = std::stoull(val);
                    else if (key == "weight") f.weight = parse_weight(val);
                    else throw err(path, lineno, "unknown header key '" + key + "'");
                } catch (const std::runtime_error&) {
                    throw;
                } catch (const std::exception&) {
                    throw err(path, lineno, "bad value for '" + key + "'");
                }
            }
            if (f.name.empty()) throw err(path, lineno, "record missing name");
            if (f.kind != "poly" && f.kind != "monos")
                throw err(path, lineno, "kind must be poly or monos");
            if (f.k < 1) throw err(path, lineno, "record missing k");
            cur = std::move(f);
            continue;
        }
        if (!cur) throw err(path, lineno, "monomial outside a record");
        Monomial m;
        try {
            m = parse_monomial(line, cur->k);
        } catch (const std::exception& e) {
            throw err(path, lineno, e.what());
        }
        if (degree(m) != cur->d)
            throw err(path, lineno, "monomial degree " + std::to_string(degree(m)) +
                                        " does not match d=" + std::to_string(cur->d));
        if (cur->weight && weight_vector(m) != *cur->weight)
            throw err(path, lineno, "monomial weight does not match the record weight");
        cur->monomials.push_back(std::move(m));
    }
    flush();
    if (out.empty()) throw std::runtime_error(path + ": no fixture records found");
    return out;
}

}  // namespace hitprob
