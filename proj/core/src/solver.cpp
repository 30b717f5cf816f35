#include "hitprob/solver.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hitprob {

namespace fs = std::filesystem;

namespace {

std::mutex g_mutex;
std::map<std::tuple<int, uint64_t, MonomialOrder>, EchelonSpacePtr> g_hit_registry;
std::string g_cache_dir;
std::function<void(uint64_t, uint64_t, size_t)> g_progress;

const char* order_name(MonomialOrder ord) {
    return ord == MonomialOrder::WeightLex ? "wlex" : "lex";
}

std::string weight_token(const WeightVector& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

fs::path cache_path(int k, uint64_t d, MonomialOrder ord,
                    const std::optional<WeightVector>& w) {
    std::string name = "k" + std::to_string(k) + "_d" + std::to_string(d);
    if (w) {
        name += "_w";
        for (size_t i = 0; i < w->size(); ++i) {
            if (i) name += '-';
            name += std::to_string((*w)[i]);
        }
    }
    name += std::string("_") + order_name(ord) + ".cache";
    return fs::path(g_cache_dir) / name;
}

std::string expected_header(int k, uint64_t d, MonomialOrder ord,
                            const std::optional<WeightVector>& w) {
    std::string h = "k=" + std::to_string(k) + " d=" + std::to_string(d);
    if (w) h += " weight=" + weight_token(*w);
    h += std::string(" order=") + order_name(ord) + " version=1";
    return h;
}

// Rows are serialized as one hex number per line, coordinate 0 in the least
// significant nibble, leading zeros trimmed (the top nibble holds the pivot).
std::string hex_encode(const std::vector<uint64_t>& words) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (size_t i = words.size(); i-- > 0;) {
        for (int sh = 60; sh >= 0; sh -= 4) {
            unsigned nib = (words[i] >> sh) & 0xf;
            if (!started && nib == 0) continue;
            started = true;
            out += digits[nib];
        }
    }
    if (!started) out = "0";
    return out;
}

bool hex_decode(const std::string& s, size_t n, BitVector& out) {
    out = BitVector(n);
    size_t nbits = s.size() * 4;
    if (nbits > ((n + 63) / 64) * 64) return false;
    auto& w = out.words();
    size_t pos = 0;  // nibble index from the least significant end
    for (size_t i = s.size(); i-- > 0; ++pos) {
        char c = s[i];
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
        else return false;
        w[pos / 16] |= static_cast<uint64_t>(v) << (4 * (pos % 16));
    }
    return out.top_bit() < static_cast<int64_t>(n);
}

void write_cache(const fs::path& path, const std::string& header,
                 const MonomialTable& table, const std::vector<uint32_t>& admissible,
                 const EchelonSpace& rel, const std::function<bool(size_t)>& keep_pivot) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) return;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << header << '\n';
        for (uint32_t c : admissible) out << to_tuple_string(table.monomial(c)) << '\n';
        out << "#relations\n";
        rel.for_each_row([&](size_t pivot, const std::vector<uint64_t>& words) {
            if (keep_pivot(pivot)) out << hex_encode(words) << '\n';
        });
        if (!out) return;
    }
    fs::rename(tmp, path, ec);  // atomic publish; losers of a race just lose
    if (ec) fs::remove(tmp, ec);
}

struct CacheData {
    std::vector<uint32_t> admissible;
    std::shared_ptr<EchelonSpace> relations;
};

std::optional<CacheData> load_cache(const fs::path& path, const std::string& header,
                                    const MonomialTable& table) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != header) return std::nullopt;
    CacheData data;
    data.relations = std::make_shared<EchelonSpace>(table.size());
    bool in_relations = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "#relations") {
            in_relations = true;
            continue;
        }
        if (!in_relations) {
            Monomial m;
            try {
                m = parse_monomial(line, table.k());
            } catch (const std::exception&) {
                return std::nullopt;
            }
            if (degree(m) != table.d()) return std::nullopt;
            data.admissible.push_back(static_cast<uint32_t>(table.coordinate(m)));
        } else {
            BitVector row;
            if (!hex_decode(line, table.size(), row)) return std::nullopt;
            try {
                data.relations->install_raw(row);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    }
    if (!in_relations) return std::nullopt;
    // Sanity: admissible coordinates must avoid the pivots.
    for (uint32_t c : data.admissible)
        if (data.relations->is_pivot(c)) return std::nullopt;
    return data;
}

std::vector<int32_t> position_map(size_t n, const std::vector<uint32_t>& admissible) {
    std::vector<int32_t> pos(n, -1);
    for (size_t t = 0; t < admissible.size(); ++t)
        pos[admissible[t]] = static_cast<int32_t>(t);
    return pos;
}

}  // namespace

void set_hit_progress(std::function<void(uint64_t, uint64_t, size_t)> fn) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_progress = std::move(fn);
}

void set_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_dir = dir;
}

const std::string& cache_dir() { return g_cache_dir; }

EchelonSpacePtr hit_space(int k, uint64_t d, MonomialOrder ord) {
    auto key = std::make_tuple(k, d, ord);
    std::string cdir;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_hit_registry.find(key);
        if (it != g_hit_registry.end()) return it->second;
        cdir = g_cache_dir;
    }
    MonomialTablePtr table = get_table(k, d, ord);
    size_t n = table->size();

    if (d == 0) {
        auto empty = std::make_shared<EchelonSpace>(n);
        std::lock_guard<std::mutex> lock(g_mutex);
        return g_hit_registry.emplace(key, empty).first->second;
    }

    std::string header = expected_header(k, d, ord, std::nullopt);
    if (!cdir.empty()) {
        if (auto data = load_cache(cache_path(k, d, ord, std::nullopt), header, *table)) {
            if (data->admissible.size() + data->relations->rank() == n) {
                std::lock_guard<std::mutex> lock(g_mutex);
                return g_hit_registry.emplace(key, data->relations).first->second;
            }
        }
    }

    auto es = std::make_shared<EchelonSpace>(n);
    HitGeneratorStream stream(k, d);
    uint64_t total = stream.pair_count();
    uint64_t done = 0;
    std::function<void(uint64_t, uint64_t, size_t)> progress;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        progress = g_progress;
    }
    stream.for_each([&](uint32_t, const Monomial&, const Polynomial& image) {
        if (!image.is_zero()) es->insert(to_bits(image, *table));
        ++done;
        if (progress && (done % 4096 == 0 || done == total)) progress(done, total, es->rank());
    });

    if (!cdir.empty()) {
        std::vector<uint32_t> adm;
        for (size_t c = 0; c < n; ++c)
            if (!es->is_pivot(c)) adm.push_back(static_cast<uint32_t>(c));
        write_cache(cache_path(k, d, ord, std::nullopt), header, *table, adm, *es,
                    [](size_t) { return true; });
    }
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_hit_registry.emplace(key, std::move(es)).first->second;
}

QuotientBasis admissible_basis(int k, uint64_t d, MonomialOrder ord) {
    QuotientBasis qb;
    qb.k = k;
    qb.d = d;
    qb.order = ord;
    qb.table = get_table(k, d, ord);
    qb.relations = hit_space(k, d, ord);
    for (size_t c = 0; c < qb.table->size(); ++c)
        if (!qb.relations->is_pivot(c)) qb.admissible.push_back(static_cast<uint32_t>(c));
    qb.coord_to_position = position_map(qb.table->size(), qb.admissible);
    return qb;
}

QuotientBasis weight_quotient_basis(int k, uint64_t d, const WeightVector& w,
                                    MonomialOrder ord) {
    if (ord != MonomialOrder::WeightLex)
        throw std::invalid_argument("weight_quotient_basis: weight subquotients need wlex order");
    QuotientBasis qb;
    qb.k = k;
    qb.d = d;
    qb.order = ord;
    qb.table = get_table(k, d, ord);
    qb.weight_id = qb.table->weight_index(w);  // throws if the weight does not occur
    qb.weight = w;

    std::string cdir = cache_dir();
    std::string header = expected_header(k, d, ord, qb.weight);
    if (!cdir.empty()) {
        if (auto data = load_cache(cache_path(k, d, ord, qb.weight), header, *qb.table)) {
            bool ok = true;
            for (uint32_t c : data->admissible)
                if (qb.table->weight_id(c) != qb.weight_id) ok = false;
            if (ok) {
                qb.relations = data->relations;
                qb.admissible = std::move(data->admissible);
                qb.coord_to_position = position_map(qb.table->size(), qb.admissible);
                return qb;
            }
        }
    }

    // The pivots of the enlarged relation space (hit + lower-weight units)
    // that fall inside the weight block agree with the pivots of the hit
    // space alone: eliminating a lower-weight unit never changes a pivot in
    // the block, so one full elimination serves every weight.
    qb.relations = hit_space(k, d, ord);
    for (size_t c = 0; c < qb.table->size(); ++c)
        if (qb.table->weight_id(c) == qb.weight_id && !qb.relations->is_pivot(c))
            qb.admissible.push_back(static_cast<uint32_t>(c));
    qb.coord_to_position = position_map(qb.table->size(), qb.admissible);

    if (!cdir.empty()) {
        const MonomialTable& table = *qb.table;
        uint16_t wid = qb.weight_id;
        write_cache(cache_path(k, d, ord, qb.weight), header, table, qb.admissible,
                    *qb.relations, [&table, wid](size_t p) { return table.weight_id(p) == wid; });
    }
    return qb;
}

BitVector to_bits(const Polynomial& f, const MonomialTable& table) {
    BitVector v(table.size());
    for (const auto& m : f.terms()) v.set(table.coordinate(m));
    return v;
}

Polynomial ClassCoordinates::representative() const {
    Polynomial p(basis->k);
    for (size_t t = 0; t < bits.size(); ++t)
        if (bits.get(t)) p.toggle(basis->admissible_monomial(t));
    return p;
}

ClassCoordinates reduce_class(const Polynomial& f, const QuotientBasis& qb) {
    ClassCoordinates cc;
    cc.basis = &qb;
    cc.bits = BitVector(qb.dim());
    if (f.is_zero()) return cc;
    if (f.k() != qb.k) throw std::invalid_argument("reduce_class: variable count mismatch");
    if (!f.is_homogeneous() || f.degree() != qb.d)
        throw std::invalid_argument("reduce_class: polynomial is not homogeneous of degree " +
                                    std::to_string(qb.d));
    BitVector v = to_bits(f, *qb.table);
    if (qb.weight) {
        for (const auto& m : f.terms()) {
            uint16_t wid = qb.table->weight_id(qb.table->coordinate(m));
            if (wid > qb.weight_id)
                throw std::invalid_argument("reduce_class: term " + to_string(m) +
                                            " has weight above " + weight_token(*qb.weight));
        }
    }
    BitVector r = qb.relations->reduce_vector(v);
    // Residual bits at lower-weight coordinates are relations of the weight
    // subquotient and drop out; everything else must land on the basis.
    for (size_t c = 0; c < r.size(); ++c) {
        if (!r.get(c)) continue;
        int32_t pos = qb.coord_to_position[c];
        if (pos >= 0) {
            cc.bits.set(static_cast<size_t>(pos));
        } else if (!qb.weight || qb.table->weight_id(c) >= qb.weight_id) {
            throw std::logic_error("reduce_class: residual off the admissible set");
        }
    }
    return cc;
}

std::pair<std::vector<Monomial>, std::vector<Monomial>> split_B0_plus(const QuotientBasis& qb) {
    std::vector<Monomial> b0, bplus;
    for (uint32_t c : qb.admissible) {
        const Monomial& m = qb.table->monomial(c);
        bool has_zero = false;
        for (uint32_t e : m.exponents)
            if (e == 0) has_zero = true;
        (has_zero ? b0 : bplus).push_back(m);
    }
    return {b0, bplus};
}

bool singer_filter(const Monomial& m, int k) {
    uint64_t d = degree(m);
    if (mu(d) > k) return false;
    Monomial spike = minimal_spike(k, d);
    return compare_weights(weight_vector(m), weight_vector(spike)) < 0;
}

}  // namespace hitprob
