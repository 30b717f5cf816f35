#include "hitprob/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hitprob {

void Polynomial::toggle(const Monomial& m) {
    if (k_ == 0) k_ = m.k();
    if (m.k() != k_) throw std::invalid_argument("Polynomial: mixed variable counts");
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint64_t d = hitprob::degree(*terms_.begin());
    for (const auto& m : terms_)
        if (hitprob::degree(m) != d) return false;
    return true;
}

uint64_t Polynomial::degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of zero polynomial");
    uint64_t d = hitprob::degree(*terms_.begin());
    for (const auto& m : terms_)
        if (hitprob::degree(m) != d)
            throw std::invalid_argument("degree of non-homogeneous polynomial");
    return d;
}

static void check_same_k(const Polynomial& f, const Polynomial& g) {
    if (f.k() != 0 && g.k() != 0 && f.k() != g.k())
        throw std::invalid_argument("polynomial arithmetic: mixed variable counts");
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    check_same_k(f, g);
    Polynomial r = f;
    for (const auto& m : g.terms()) r.toggle(m);
    return r;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    check_same_k(f, g);
    int k = f.k() ? f.k() : g.k();
    Polynomial r(k);
    for (const auto& a : f.terms())
        for (const auto& b : g.terms()) {
            Monomial m = a;
            for (int i = 0; i < k; ++i)
                m.exponents[static_cast<size_t>(i)] += b[i];
            r.toggle(m);
        }
    return r;
}

Polynomial poly_pow(const Polynomial& f, uint32_t e) {
    Polynomial r(f.k());
    r.toggle(Monomial(std::vector<uint32_t>(static_cast<size_t>(f.k()), 0)));
    Polynomial base = f;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(m);
    }
    return os.str();
}

Polynomial parse_polynomial(const std::string& s, int k) {
    Polynomial r(k);
    size_t start = 0;
    bool saw_term = false;
    auto flush = [&](size_t end) {
        std::string t = s.substr(start, end - start);
        size_t a = t.find_first_not_of(" \t");
        if (a == std::string::npos) {
            if (saw_term) throw std::invalid_argument("parse_polynomial: empty term: " + s);
            return;
        }
        size_t b = t.find_last_not_of(" \t");
        t = t.substr(a, b - a + 1);
        saw_term = true;
        if (t == "0") return;
        r.toggle(parse_monomial(t, k));
    };
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+') {
            flush(i);
            start = i + 1;
            saw_term = true;
        }
    }
    flush(s.size());
    return r;
}

}  // namespace hitprob
