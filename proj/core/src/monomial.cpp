#include "hitprob/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hitprob {

uint64_t degree(const Monomial& m) {
    uint64_t d = 0;
    for (uint32_t a : m.exponents) d += a;
    return d;
}

WeightVector weight_vector(const Monomial& m) {
    uint32_t all = 0;
    for (uint32_t a : m.exponents) all |= a;
    WeightVector w;
    for (int j = 0; (all >> j) != 0; ++j) {
        uint32_t c = 0;
        for (uint32_t a : m.exponents) c += (a >> j) & 1u;
        w.push_back(c);
    }
    return w;
}

uint64_t weight_degree(const WeightVector& w) {
    uint64_t d = 0;
    for (size_t j = 0; j < w.size(); ++j) d += (uint64_t(1) << j) * w[j];
    return d;
}

int compare_weights(const WeightVector& a, const WeightVector& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t j = 0; j < n; ++j) {
        uint32_t x = j < a.size() ? a[j] : 0;
        uint32_t y = j < b.size() ? b[j] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int mu(uint64_t n) {
    if (n == 0) return 0;
    // DP over parts 2^s - 1
    std::vector<int> best(n + 1, std::numeric_limits<int>::max());
    best[0] = 0;
    for (uint64_t i = 1; i <= n; ++i)
        for (uint64_t p = 1; p <= i; p = 2 * p + 1)
            if (best[i - p] != std::numeric_limits<int>::max())
                best[i] = std::min(best[i], best[i - p] + 1);
    return best[n];
}

static bool is_pow2m1(uint32_t a) { return (a & (a + 1)) == 0; }

bool is_spike(const Monomial& m) {
    return std::all_of(m.exponents.begin(), m.exponents.end(), is_pow2m1);
}

Monomial minimal_spike(int k, uint64_t d) {
    if (k < 1) throw std::invalid_argument("minimal_spike: k must be >= 1");
    if (mu(d) > k) throw std::invalid_argument("minimal_spike: no spike of this degree");
    // Enumerate nonincreasing tuples of parts 2^s - 1 summing to d, keep the
    // weight-then-lex minimum.
    std::vector<uint32_t> cur, best;
    WeightVector best_w;
    auto consider = [&](const std::vector<uint32_t>& parts) {
        Monomial m(std::vector<uint32_t>(static_cast<size_t>(k), 0));
        std::copy(parts.begin(), parts.end(), m.exponents.begin());
        WeightVector w = weight_vector(m);
        if (best.empty() ||
            compare_weights(w, best_w) < 0 ||
            (compare_weights(w, best_w) == 0 && m.exponents < best)) {
            best = m.exponents;
            best_w = std::move(w);
        }
    };
    auto rec = [&](auto&& self, uint64_t rem, uint32_t maxpart) -> void {
        if (rem == 0) {
            consider(cur);
            return;
        }
        if (cur.size() == static_cast<size_t>(k)) return;
        for (uint32_t p = maxpart; p >= 1; p = p / 2) {  // parts 2^s-1: ..15,7,3,1
            if (p > rem) continue;
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    uint32_t top = 1;
    while (uint64_t(top) * 2 + 1 <= d) top = top * 2 + 1;
    rec(rec, d, top);
    return Monomial(best);
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.k(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << 'x' << (i + 1);
        if (m[i] > 1) os << '^' << m[i];
    }
    if (first) os << '1';
    return os.str();
}

std::string to_tuple_string(const Monomial& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.k(); ++i) {
        if (i) os << ',';
        os << m[i];
    }
    os << ']';
    return os.str();
}

static void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

Monomial parse_monomial(const std::string& s, int k) {
    if (k < 1) throw std::invalid_argument("parse_monomial: k must be >= 1");
    Monomial m(std::vector<uint32_t>(static_cast<size_t>(k), 0));
    size_t i = 0;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '[') {
        ++i;
        for (int v = 0; v < k; ++v) {
            skip_ws(s, i);
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("parse_monomial: bad tuple: " + s);
            m.exponents[static_cast<size_t>(v)] =
                static_cast<uint32_t>(std::stoul(s.substr(i, j - i)));
            i = j;
            skip_ws(s, i);
            if (v + 1 < k) {
                if (i >= s.size() || s[i] != ',')
                    throw std::invalid_argument("parse_monomial: expected ',': " + s);
                ++i;
            }
        }
        if (i >= s.size() || s[i] != ']')
            throw std::invalid_argument("parse_monomial: expected ']': " + s);
        return m;
    }
    if (s.substr(i) == "1") return m;
    while (i < s.size()) {
        skip_ws(s, i);
        if (i >= s.size()) break;
        if (s[i] != 'x') throw std::invalid_argument("parse_monomial: expected 'x': " + s);
        ++i;
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("parse_monomial: missing variable index: " + s);
        int v = std::stoi(s.substr(i, j - i));
        if (v < 1 || v > k) throw std::invalid_argument("parse_monomial: variable out of range: " + s);
        i = j;
        uint32_t e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("parse_monomial: missing exponent: " + s);
            e = static_cast<uint32_t>(std::stoul(s.substr(i, j - i)));
            i = j;
        }
        if (m.exponents[static_cast<size_t>(v - 1)] != 0)
            throw std::invalid_argument("parse_monomial: repeated variable: " + s);
        m.exponents[static_cast<size_t>(v - 1)] = e;
    }
    return m;
}

}  // namespace hitprob
