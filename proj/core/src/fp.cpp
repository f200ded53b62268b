#include "frobcoh/fp.hpp"

#include <cassert>

namespace frobcoh {

long long fp_inverse(long long a, long long p) {
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    assert(r == 1 && "not invertible");
    return ((t % p) + p) % p;
}

std::size_t FpMat::rank() const {
    std::vector<int64_t> a = a_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && a[piv * cols_ + col] == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a[rank * cols_ + c], a[piv * cols_ + c]);
        long long inv = fp_inverse(a[rank * cols_ + col], p_);
        for (std::size_t c = col; c < cols_; ++c)
            a[rank * cols_ + c] = a[rank * cols_ + c] * inv % p_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            long long f = a[r * cols_ + col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                a[r * cols_ + c] = ((a[r * cols_ + c] - f * a[rank * cols_ + c]) % p_ + p_) % p_;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int64_t>> FpMat::kernel_basis() const {
    std::vector<int64_t> a = a_;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && a[piv * cols_ + col] == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a[rank * cols_ + c], a[piv * cols_ + c]);
        long long inv = fp_inverse(a[rank * cols_ + col], p_);
        for (std::size_t c = col; c < cols_; ++c)
            a[rank * cols_ + c] = a[rank * cols_ + c] * inv % p_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            long long f = a[r * cols_ + col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                a[r * cols_ + c] = ((a[r * cols_ + c] - f * a[rank * cols_ + c]) % p_ + p_) % p_;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<int64_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int64_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            long long x = a[r * cols_ + free];
            if (x != 0) v[pivot_col[r]] = (p_ - x) % p_;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool FpRowSpace::insert(std::vector<int64_t> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        long long f = v[pivots_[k]];
        if (f == 0) continue;
        const auto& row = rows_[k];
        for (std::size_t c = 0; c < dim_; ++c)
            v[c] = ((v[c] - f * row[c]) % p_ + p_) % p_;
    }
    std::size_t piv = dim_;
    for (std::size_t c = 0; c < dim_; ++c)
        if (v[c] != 0) {
            piv = c;
            break;
        }
    if (piv == dim_) return false;
    long long inv = fp_inverse(v[piv], p_);
    for (std::size_t c = 0; c < dim_; ++c) v[c] = v[c] * inv % p_;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

} // namespace frobcoh
