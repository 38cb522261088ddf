#include "rankwl/bits.hpp"

#include <bit>
#include <stdexcept>

namespace rankwl {

int BitVector::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return int(w) * 64 + std::countr_zero(words_[w]);
    return -1;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows) {
    int cols = rows.empty() ? 0 : rows[0].len();
    for (const auto& r : rows)
        if (r.len() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    BitMatrix m(int(rows.size()), cols);
    for (int r = 0; r < int(rows.size()); ++r) {
        auto w = rows[r].words();
        for (std::size_t i = 0; i < w.size(); ++i)
            m.data_[std::size_t(r) * m.words_per_row_ + i] = w[i];
    }
    return m;
}

BitVector BitMatrix::row(int r) const {
    BitVector v(cols_);
    for (int c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

namespace {

// In-place elimination helper over a row set represented as BitVectors.
// Maintains rows in echelon form, one row per pivot column.
struct Eliminator {
    std::vector<BitVector> rows; // echelon rows
    std::vector<int> pivots;     // pivot column of rows[i]

    // Reduces v by the stored rows. Returns true (and absorbs the residue)
    // if v is independent of the stored rows.
    bool add(BitVector v) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v.xor_with(rows[i]);
        int p = v.lowest_set();
        if (p < 0) return false;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

} // namespace

int rank_f2(std::span<const BitVector> rows) {
    Eliminator e;
    int rank = 0;
    for (const auto& r : rows)
        if (e.add(r)) ++rank;
    return rank;
}

int rank_f2(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rank_f2(rows);
}

std::vector<int> greedy_basis(std::span<const BitVector> vectors) {
    int len = vectors.empty() ? 0 : vectors[0].len();
    for (const auto& v : vectors)
        if (v.len() != len) throw std::invalid_argument("greedy_basis: length mismatch");
    Eliminator e;
    std::vector<int> picked;
    for (int i = 0; i < int(vectors.size()); ++i)
        if (e.add(vectors[i])) picked.push_back(i);
    return picked;
}

std::vector<int> extend_basis(std::span<const int> seed, std::span<const BitVector> vectors) {
    int len = vectors.empty() ? 0 : vectors[0].len();
    for (const auto& v : vectors)
        if (v.len() != len) throw std::invalid_argument("extend_basis: length mismatch");
    Eliminator e;
    std::vector<int> out;
    std::vector<bool> in_seed(vectors.size(), false);
    for (int idx : seed) {
        if (idx < 0 || idx >= int(vectors.size()))
            throw std::invalid_argument("extend_basis: seed index out of range");
        if (!e.add(vectors[idx]))
            throw std::invalid_argument("extend_basis: seed vectors are not independent");
        in_seed[idx] = true;
        out.push_back(idx);
    }
    for (int i = 0; i < int(vectors.size()); ++i)
        if (!in_seed[i] && e.add(vectors[i])) out.push_back(i);
    return out;
}

} // namespace rankwl
