#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rankwl {

// Packed bit vector over GF(2). Padding bits above len() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int len) : len_(len), words_((len + 63) / 64, 0) {}

    int len() const { return len_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void xor_with(const BitVector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    // Index of the lowest set bit, or -1 if zero.
    int lowest_set() const;

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    int len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major packed bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(std::size_t(rows) * words_per_row_, 0) {}

    static BitMatrix from_rows(std::span<const BitVector> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const {
        return (data_[std::size_t(r) * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool v) {
        std::uint64_t& w = data_[std::size_t(r) * words_per_row_ + (c >> 6)];
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v) w |= mask;
        else w &= ~mask;
    }
    BitVector row(int r) const;

private:
    int rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

// Row rank over GF(2), by forward elimination on a copy.
int rank_f2(const BitMatrix& m);
int rank_f2(std::span<const BitVector> rows);

// Indices of the first-fit maximal linearly independent subset, scanning the
// input in order. The selected rows span the same space as the whole input.
std::vector<int> greedy_basis(std::span<const BitVector> vectors);

// Extends the (independent) rows at `seed` to a basis of the span of all
// input rows. Seed indices are kept first, in their given order; extension
// indices are appended first-fit in scan order. Throws std::invalid_argument
// if the seed rows are dependent or lengths mismatch.
std::vector<int> extend_basis(std::span<const int> seed, std::span<const BitVector> vectors);

} // namespace rankwl
