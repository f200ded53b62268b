#pragma once

#include <cstdint>
#include <vector>

namespace frobcoh {

/* Dense matrix over the prime field F_p, just enough for exact rank and
   kernel computations on the small weight blocks that arise here. */
class FpMat {
  public:
    FpMat(long long p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    long long p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void add_at(std::size_t r, std::size_t c, long long v) {
        auto& x = a_[r * cols_ + c];
        x = ((x + v) % p_ + p_) % p_;
    }

    std::size_t rank() const;
    /* basis of the right kernel, as column vectors */
    std::vector<std::vector<int64_t>> kernel_basis() const;

  private:
    long long p_;
    std::size_t rows_, cols_;
    std::vector<int64_t> a_;
};

long long fp_inverse(long long a, long long p);

/* Incremental row space over F_p: feed vectors, track the rank.  Used to
   extract generators of a graded module modulo a graded submodule. */
class FpRowSpace {
  public:
    FpRowSpace(long long p, std::size_t dim) : p_(p), dim_(dim) {}

    /* returns true when the vector enlarged the span */
    bool insert(std::vector<int64_t> v);
    std::size_t rank() const { return rows_.size(); }

  private:
    long long p_;
    std::size_t dim_;
    std::vector<std::vector<int64_t>> rows_; // reduced, with pivot columns
    std::vector<std::size_t> pivots_;
};

} // namespace frobcoh
