#pragma once

#include <cstdint>
#include <vector>

#include "modplab/params.hpp"

namespace modplab {

// Dense matrices over F_p, p < 2^15. Degrees involved are small, so plain
// Gaussian elimination throughout.
struct FpMat {
    long p;
    size_t rows = 0, cols = 0;
    std::vector<int32_t> a;  // row-major

    FpMat(long p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    int32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    int32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
    void set(size_t i, size_t j, long v) {
        long m = v % p;
        at(i, j) = static_cast<int32_t>(m < 0 ? m + p : m);
    }

    static long inv_mod(long x, long p) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    // in-place row echelon; returns pivot columns
    std::vector<size_t> echelon() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols && r < rows; ++c) {
            size_t sel = r;
            while (sel < rows && at(sel, c) == 0) ++sel;
            if (sel == rows) continue;
            std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols, a.begin() + r * cols);
            long inv = inv_mod(at(r, c), p);
            for (size_t j = c; j < cols; ++j) at(r, j) = static_cast<int32_t>(at(r, j) * inv % p);
            for (size_t i = 0; i < rows; ++i) {
                if (i == r || at(i, c) == 0) continue;
                long m = at(i, c);
                for (size_t j = c; j < cols; ++j)
                    at(i, j) = static_cast<int32_t>(((at(i, j) - m * at(r, j)) % p + p) % p);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        FpMat m = *this;
        return m.echelon().size();
    }

    // basis of the right null space (vectors v with M v = 0)
    std::vector<std::vector<int32_t>> nullspace() const {
        FpMat m = *this;
        auto pivots = m.echelon();
        std::vector<bool> is_pivot(cols, false);
        for (size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<int32_t>> basis;
        for (size_t fc = 0; fc < cols; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<int32_t> v(cols, 0);
            v[fc] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) {
                long val = (p - m.at(r, fc)) % p;
                v[pivots[r]] = static_cast<int32_t>(val);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }
};

// dimension of the span of a list of F_p vectors
inline size_t span_dim(long p, const std::vector<std::vector<int32_t>>& vecs, size_t ambient) {
    if (vecs.empty()) return 0;
    FpMat m(p, vecs.size(), ambient);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < ambient; ++j) m.set(i, j, vecs[i][j]);
    return m.rank();
}

// does target lie in the span of vecs
inline bool in_span(long p, const std::vector<std::vector<int32_t>>& vecs, const std::vector<int32_t>& target) {
    size_t ambient = target.size();
    FpMat m(p, vecs.size() + 1, ambient);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < ambient; ++j) m.set(i, j, vecs[i][j]);
    size_t d0 = m.rank();
    for (size_t j = 0; j < ambient; ++j) m.set(vecs.size(), j, target[j]);
    return m.rank() == d0;
}

// equality of two subspaces given by spanning sets
inline bool same_span(long p, const std::vector<std::vector<int32_t>>& a, const std::vector<std::vector<int32_t>>& b,
                      size_t ambient) {
    size_t da = span_dim(p, a, ambient), db = span_dim(p, b, ambient);
    if (da != db) return false;
    std::vector<std::vector<int32_t>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return span_dim(p, all, ambient) == da;
}

}  // namespace modplab
