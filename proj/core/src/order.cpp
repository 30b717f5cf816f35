#include "hitprob/order.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hitprob {

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (a.k() != b.k()) throw std::invalid_argument("compare: mixed variable counts");
    if (degree(a) != degree(b)) throw std::invalid_argument("compare: mixed degrees");
    if (ord == MonomialOrder::WeightLex) {
        int c = compare_weights(weight_vector(a), weight_vector(b));
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.exponents <=> b.exponents;
}

static void gen_compositions(int k, uint64_t d, std::vector<uint32_t>& cur,
                             std::vector<Monomial>& out) {
    if (cur.size() + 1 == static_cast<size_t>(k)) {
        cur.push_back(static_cast<uint32_t>(d));
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (uint64_t e = 0; e <= d; ++e) {
        cur.push_back(static_cast<uint32_t>(e));
        gen_compositions(k, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> enumerate_monomials(int k, uint64_t d, MonomialOrder ord,
                                          const std::optional<WeightVector>& weight) {
    if (k < 1) throw std::invalid_argument("enumerate_monomials: k must be >= 1");
    std::vector<Monomial> out;
    std::vector<uint32_t> cur;
    gen_compositions(k, d, cur, out);
    if (weight) {
        std::erase_if(out, [&](const Monomial& m) { return weight_vector(m) != *weight; });
    }
    if (ord == MonomialOrder::WeightLex) {
        std::vector<std::pair<WeightVector, size_t>> keys(out.size());
        for (size_t i = 0; i < out.size(); ++i) keys[i] = {weight_vector(out[i]), i};
        std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
            int c = compare_weights(x.first, y.first);
            if (c != 0) return c < 0;
            return out[x.second].exponents < out[y.second].exponents;
        });
        std::vector<Monomial> sorted;
        sorted.reserve(out.size());
        for (const auto& [w, i] : keys) sorted.push_back(std::move(out[i]));
        return sorted;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
    return out;
}

static uint64_t pack(const Monomial& m) {
    if (m.k() > 8) throw std::invalid_argument("MonomialTable: k > 8 unsupported");
    uint64_t key = 0;
    for (int i = 0; i < m.k(); ++i) {
        if (m[i] > 255) throw std::invalid_argument("MonomialTable: exponent > 255 unsupported");
        key = (key << 8) | m[i];
    }
    return key;
}

MonomialTable::MonomialTable(int k, uint64_t d, MonomialOrder ord)
    : k_(k), d_(d), ord_(ord), monomials_(enumerate_monomials(k, d, ord)) {
    index_.reserve(monomials_.size() * 2);
    weight_id_.resize(monomials_.size());
    std::map<WeightVector, uint16_t, decltype([](const WeightVector& a, const WeightVector& b) {
                 return compare_weights(a, b) < 0;
             })>
        wmap;
    std::vector<WeightVector> wv(monomials_.size());
    for (size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(pack(monomials_[i]), static_cast<uint32_t>(i));
        wv[i] = weight_vector(monomials_[i]);
        wmap.emplace(wv[i], 0);
    }
    uint16_t id = 0;
    for (auto& [w, wid] : wmap) {
        wid = id++;
        weights_.push_back(w);
    }
    for (size_t i = 0; i < monomials_.size(); ++i) weight_id_[i] = wmap.at(wv[i]);
}

size_t MonomialTable::coordinate(const Monomial& m) const {
    auto it = index_.find(pack(m));
    if (it == index_.end())
        throw std::invalid_argument("MonomialTable: monomial not of this (k, d): " +
                                    to_string(m));
    return it->second;
}

uint16_t MonomialTable::weight_index(const WeightVector& w) const {
    for (size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] == w) return static_cast<uint16_t>(i);
    throw std::invalid_argument("MonomialTable: weight does not occur in this degree");
}

MonomialTablePtr get_table(int k, uint64_t d, MonomialOrder ord) {
    static std::mutex mu;
    static std::map<std::tuple<int, uint64_t, int>, MonomialTablePtr> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(k, d, static_cast<int>(ord));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<const MonomialTable>(k, d, ord);
    cache.emplace(key, t);
    return t;
}

}  // namespace hitprob
