#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace twistcc {

// Packed GF(2) row vector.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    // parity of <this, other> as plain dot product over GF(2)
    bool dot(const BitVec& o) const {
        uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }
    int lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return int(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }
    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

// Row-major GF(2) matrix with O(rows*cols/64) elimination.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    const BitVec& row(std::size_t r) const { return rows_[r]; }
    void add_row(const BitVec& v) { rows_.push_back(v); cols_ = v.size(); }

    std::size_t rank() const;

    // Reduced form with pivot bookkeeping; `combos[i]` records which original
    // rows sum to reduced row i (length rows()).
    struct Reduced {
        std::vector<BitVec> rows;    // nonzero reduced rows
        std::vector<int> pivots;     // pivot column per reduced row
        std::vector<BitVec> combos;  // combination over original rows
    };
    Reduced reduce() const;

    // Solve x s.t. x is a combination of this matrix's rows equal to target.
    // Returns the combination (length rows()) or nullopt.
    std::optional<BitVec> solve_combination(const BitVec& target) const;

    // Basis of { y : M y^T = 0 } (vectors of length cols()).
    std::vector<BitVec> nullspace() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

}  // namespace twistcc
