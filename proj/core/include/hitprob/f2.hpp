#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hitprob {

/// Dense bit vector over F2; bit i is coordinate i.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool is_zero() const;
    size_t popcount() const;

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void toggle(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void operator^=(const BitVector& o);

    /// Highest set coordinate, or -1 when zero.
    int64_t top_bit() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    bool operator==(const BitVector&) const = default;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// List of equal-length rows; row count may exceed the ambient dimension.
struct F2Matrix {
    size_t cols = 0;
    std::vector<BitVector> rows;

    F2Matrix() = default;
    explicit F2Matrix(size_t n) : cols(n) {}
    void add_row(BitVector v);
};

/// Vertical concatenation; kernel(stack) is the intersection of kernels.
F2Matrix stack(const std::vector<F2Matrix>& ms);

/// Basis of the right kernel {x : Mx = 0}.
std::vector<BitVector> kernel(const F2Matrix& m);

/// Incrementally built echelon-form subspace of F2^N with
/// highest-coordinate-first pivoting. Rows are stored truncated at their
/// pivot word; they are not inter-reduced, reduce_vector makes residuals
/// canonical by a single top-down sweep.
class EchelonSpace {
public:
    explicit EchelonSpace(size_t n);

    size_t ambient_dim() const { return n_; }
    size_t rank() const { return rows_.size(); }

    /// True iff a coordinate is a pivot.
    bool is_pivot(size_t coord) const { return pivot_row_[coord] >= 0; }

    /// Reduces v against the space; installs a nonzero residual as a new
    /// pivot row and returns true, returns false when v was already inside.
    bool insert(const BitVector& v);

    /// Canonical residual of v: zero at every pivot coordinate,
    /// v - residual lies in the space.
    BitVector reduce_vector(const BitVector& v) const;

    bool contains(const BitVector& v) const;

    /// Pivot coordinates, ascending.
    std::vector<size_t> pivots() const;

    /// Fully inter-reduced rows keyed by pivot coordinate, ascending pivot.
    /// The canonical form of the subspace; used for equality and caching.
    std::vector<BitVector> canonical_rows() const;

    /// Installs a row whose top bit is not yet a pivot, without reduction.
    /// For cache loading; the caller guarantees distinct top bits.
    void install_raw(const BitVector& row);

    /// Visits stored rows as (pivot, words truncated at the pivot word),
    /// ascending pivot. For serialization.
    void for_each_row(
        const std::function<void(size_t, const std::vector<uint64_t>&)>& fn) const;

private:
    // In-place cascade; returns the first non-pivot top coordinate hit with
    // clear_free=false, or reduces to the canonical residual with clear_free
    // (non-pivot bits moved into *residual).
    void sweep(std::vector<uint64_t>& v, BitVector* residual) const;

    size_t n_;
    std::vector<int32_t> pivot_row_;         // coord -> index into rows_, -1 if none
    std::vector<std::vector<uint64_t>> rows_;  // truncated at pivot word
    std::vector<size_t> row_pivot_;          // index into rows_ -> pivot coord
};

}  // namespace hitprob
