#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobcoh/chevalley.hpp"
#include "frobcoh/tchar.hpp"

namespace frobcoh {

/* A finite-dimensional X(T)-graded local algebra given by truncated
   monomials in graded generators:

     - u(u), the restricted enveloping algebra of the span of negative
       root vectors, with PBW basis x_0^{a_0}...x_{N-1}^{a_{N-1}},
       0 <= a_i < p, straightened with the Chevalley constants and
       x^{[p]} = 0;
     - for the rank-1 higher Frobenius kernels, the commutative algebra
       on truncated divided-power generators of weights -p^i alpha.

   Everything downstream (the Ext oracle) only uses the multiplication,
   so it is independent of the Chevalley-Eilenberg machinery. */
class FiniteGradedAlgebra {
  public:
    using Combo = std::map<int, std::int64_t>; // basis index -> coefficient mod p

    long long p() const { return p_; }
    std::size_t dim() const { return mono_weight_.size(); }
    std::size_t num_vars() const { return var_weight_.size(); }
    const Weight& var_weight(int v) const { return var_weight_[static_cast<std::size_t>(v)]; }
    const Weight& mono_weight(int m) const { return mono_weight_[static_cast<std::size_t>(m)]; }
    std::size_t rank() const { return var_weight_.empty() ? 0 : var_weight_[0].rank(); }

    std::vector<int> exponents_of(int m) const;
    int index_of(const std::vector<int>& exps) const;

    /* x_v . (basis monomial m), straightened */
    const Combo& mul_var(int v, int m) const;
    /* (basis monomial m) . w  for a combo w */
    Combo mul_mono(int m, const Combo& w) const;
    Combo mul(const Combo& a, const Combo& b) const;

    /* spot-checks associativity on basis triples; exhaustive when the
       dimension is at most cutoff, sampled otherwise */
    bool associativity_check(std::size_t exhaustive_cutoff = 1000, int samples = 20000) const;

    static FiniteGradedAlgebra restricted_enveloping(const NilpotentAlgebra& A, long long p);
    static FiniteGradedAlgebra truncated_divided_powers(const RootSystem& R1, long long p, int r);

  private:
    long long p_ = 0;
    bool commutative_ = false;
    std::vector<Weight> var_weight_;
    std::vector<Weight> mono_weight_;
    // bracket_[v][j] = (target var k, coefficient) for [x_v, x_j], v > j
    std::vector<std::vector<std::pair<int, std::int64_t>>> bracket_;
    mutable std::map<std::pair<int, int>, Combo> mul_memo_;
};

/* Weight-graded minimal free resolution of the trivial module, built by
   iterated syzygy kernels; gens(n) carries the generator weights of the
   n-th free module, so dim Ext^n and its T-character read off directly. */
class MinimalResolution {
  public:
    MinimalResolution(const FiniteGradedAlgebra& A, int depth);

    /* T-character of Ext^n(k,k) = H^n(U,k): dual generator weights */
    TChar ext_char(int n) const;

    /* T-character of Ext^n(k,M) for a module given by its basis weights
       and per-variable action matrices (column-major, mod p). */
    TChar ext_char_with_coefficients(int n, const std::vector<Weight>& m_weights,
                                     const std::vector<std::vector<std::vector<std::int64_t>>>& action) const;

    int depth() const { return static_cast<int>(gen_weights_.size()) - 1; }

  private:
    const FiniteGradedAlgebra& A_;
    // generator weights per homological degree, 0..depth
    std::vector<std::vector<Weight>> gen_weights_;
    // maps e_g -> element of previous free module, entries ((mono, gen), coeff)
    using FreeVec = std::map<std::pair<int, int>, std::int64_t>;
    std::vector<std::vector<FreeVec>> gen_images_;
};

/* H^n(U_r, k) as a T-character for the supported envelope:
   A_1 (r <= 3), A_2 and B_2 (r = 1), p <= 5, n <= 3. */
TChar restricted_ext(const RootSystem& R, long long p, int r, int n);

struct BrOracleResult {
    long long dim;
    TChar weights; // the p^r nu that occur, with multiplicity
};

/* H^n(B_r, lambda) = (H^n(U_r,k) (x) lambda)^{T_r}: keeps the weights mu
   of H^n(U_r,k) with mu + lambda in p^r X(T). */
BrOracleResult br_cohomology_oracle(const RootSystem& R, long long p, int r, int n,
                                    const Weight& lambda);

/* H^1(U_1, u*) computed from the resolution, for the comparison with
   H^1(u, u*). */
TChar u1_ustar_oracle(const NilpotentAlgebra& A, long long p, int n);

} // namespace frobcoh
