#include "twistcc/gf2.hpp"

namespace twistcc {

std::size_t BitMatrix::rank() const {
    std::vector<BitVec> work = rows_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[piv], work[r]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        ++r;
    }
    return r;
}

BitMatrix::Reduced BitMatrix::reduce() const {
    Reduced out;
    std::vector<BitVec> work = rows_;
    std::vector<BitVec> comb(rows_.size(), BitVec(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) comb[i].set(i, true);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[piv], work[r]);
        std::swap(comb[piv], comb[r]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != r && work[i].get(c)) {
                work[i] ^= work[r];
                comb[i] ^= comb[r];
            }
        }
        out.pivots.push_back(int(c));
        ++r;
    }
    for (std::size_t i = 0; i < r; ++i) {
        out.rows.push_back(work[i]);
        out.combos.push_back(comb[i]);
    }
    return out;
}

std::optional<BitVec> BitMatrix::solve_combination(const BitVec& target) const {
    Reduced red = reduce();
    BitVec rem = target;
    BitVec combo(rows());
    for (std::size_t i = 0; i < red.rows.size(); ++i) {
        if (rem.get(std::size_t(red.pivots[i]))) {
            rem ^= red.rows[i];
            combo ^= red.combos[i];
        }
    }
    if (rem.any()) return std::nullopt;
    return combo;
}

std::vector<BitVec> BitMatrix::nullspace() const {
    // Row-reduce, record pivot columns, back-substitute free columns.
    std::vector<BitVec> work = rows_;
    std::vector<int> pivot_of_col(cols_, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[piv], work[r]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        pivot_of_col[c] = int(r);
        ++r;
    }
    std::vector<BitVec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        BitVec v(cols_);
        v.set(c, true);
        for (std::size_t pc = 0; pc < cols_; ++pc) {
            int pr = pivot_of_col[pc];
            if (pr >= 0 && work[std::size_t(pr)].get(c)) v.set(pc, true);
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace twistcc
