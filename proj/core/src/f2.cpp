#include "hitprob/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hitprob {

bool BitVector::is_zero() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

size_t BitVector::popcount() const {
    size_t c = 0;
    for (uint64_t x : w_) c += static_cast<size_t>(std::popcount(x));
    return c;
}

void BitVector::operator^=(const BitVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVector: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

int64_t BitVector::top_bit() const {
    for (size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return static_cast<int64_t>(i * 64 + 63 - std::countl_zero(w_[i]));
    return -1;
}

void F2Matrix::add_row(BitVector v) {
    if (v.size() != cols) throw std::invalid_argument("F2Matrix: row length mismatch");
    rows.push_back(std::move(v));
}

F2Matrix stack(const std::vector<F2Matrix>& ms) {
    if (ms.empty()) return {};
    F2Matrix out(ms.front().cols);
    for (const auto& m : ms) {
        if (m.cols != out.cols) throw std::invalid_argument("stack: column count mismatch");
        for (const auto& r : m.rows) out.rows.push_back(r);
    }
    return out;
}

EchelonSpace::EchelonSpace(size_t n) : n_(n), pivot_row_(n, -1) {}

bool EchelonSpace::insert(const BitVector& v) {
    if (v.size() != n_) throw std::invalid_argument("EchelonSpace: length mismatch");
    std::vector<uint64_t> buf = v.words();
    size_t wi = buf.size();
    while (wi-- > 0) {
        while (buf[wi]) {
            size_t coord = wi * 64 + 63 - static_cast<size_t>(std::countl_zero(buf[wi]));
            int32_t ri = pivot_row_[coord];
            if (ri < 0) {
                rows_.emplace_back(buf.begin(), buf.begin() + static_cast<ptrdiff_t>(wi + 1));
                row_pivot_.push_back(coord);
                pivot_row_[coord] = static_cast<int32_t>(rows_.size() - 1);
                return true;
            }
            const auto& row = rows_[static_cast<size_t>(ri)];
            for (size_t j = 0; j < row.size(); ++j) buf[j] ^= row[j];
        }
    }
    return false;
}

void EchelonSpace::sweep(std::vector<uint64_t>& buf, BitVector* residual) const {
    size_t wi = buf.size();
    while (wi-- > 0) {
        while (buf[wi]) {
            size_t b = 63 - static_cast<size_t>(std::countl_zero(buf[wi]));
            size_t coord = wi * 64 + b;
            int32_t ri = pivot_row_[coord];
            if (ri < 0) {
                residual->set(coord);
                buf[wi] &= ~(uint64_t(1) << b);
                continue;
            }
            const auto& row = rows_[static_cast<size_t>(ri)];
            for (size_t j = 0; j < row.size(); ++j) buf[j] ^= row[j];
        }
    }
}

BitVector EchelonSpace::reduce_vector(const BitVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("EchelonSpace: length mismatch");
    std::vector<uint64_t> buf = v.words();
    BitVector res(n_);
    sweep(buf, &res);
    return res;
}

bool EchelonSpace::contains(const BitVector& v) const { return reduce_vector(v).is_zero(); }

std::vector<size_t> EchelonSpace::pivots() const {
    std::vector<size_t> p = row_pivot_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<BitVector> EchelonSpace::canonical_rows() const {
    std::vector<BitVector> out;
    out.reserve(rows_.size());
    for (size_t coord : pivots()) {
        BitVector e(n_);
        e.set(coord);
        BitVector row = reduce_vector(e);
        row ^= e;  // e - residual is the space element supported off other pivots
        out.push_back(std::move(row));
    }
    return out;
}

void EchelonSpace::install_raw(const BitVector& row) {
    if (row.size() != n_) throw std::invalid_argument("EchelonSpace: length mismatch");
    int64_t p = row.top_bit();
    if (p < 0) return;
    if (pivot_row_[static_cast<size_t>(p)] >= 0)
        throw std::invalid_argument("EchelonSpace: duplicate pivot in raw install");
    size_t nwords = static_cast<size_t>(p) / 64 + 1;
    rows_.emplace_back(row.words().begin(),
                       row.words().begin() + static_cast<ptrdiff_t>(nwords));
    row_pivot_.push_back(static_cast<size_t>(p));
    pivot_row_[static_cast<size_t>(p)] = static_cast<int32_t>(rows_.size() - 1);
}

void EchelonSpace::for_each_row(
    const std::function<void(size_t, const std::vector<uint64_t>&)>& fn) const {
    for (size_t p : pivots()) fn(p, rows_[static_cast<size_t>(pivot_row_[p])]);
}

std::vector<BitVector> kernel(const F2Matrix& m) {
    EchelonSpace es(m.cols);
    for (const auto& r : m.rows) es.insert(r);
    std::vector<BitVector> rref = es.canonical_rows();
    std::vector<size_t> piv = es.pivots();
    std::vector<BitVector> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (es.is_pivot(f)) continue;
        BitVector x(m.cols);
        x.set(f);
        for (size_t i = 0; i < piv.size(); ++i)
            if (rref[i].get(f)) x.set(piv[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace hitprob
