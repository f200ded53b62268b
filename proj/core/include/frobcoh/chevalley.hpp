#pragma once

#include <tuple>
#include <vector>

#include "frobcoh/root_system.hpp"

namespace frobcoh {

/* Chevalley-basis structure constants for the span of negative root
   vectors u = Lie(U): [x_{-a}, x_{-b}] = N_{-a,-b} x_{-(a+b)}.

   Constants are computed over Z once (signs fixed by extraspecial pairs
   relative to the canonical root order) and reduced mod p by the callers.
   Construction checks antisymmetry, the magnitude rule
   |N_{a,b}| = p_{ab} + 1, and the Jacobi identity on all triples. */
class NilpotentAlgebra {
  public:
    RootSystem R;

    std::size_t dim() const { return R.num_positive_roots(); }

    /* index of beta_i + beta_j among the positive roots, or -1 */
    int sum_index(int i, int j) const { return sum_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /* N_{beta_i, beta_j} over Z (0 when the sum is not a root) */
    long long n_pos(int i, int j) const;
    /* N_{-beta_i, -beta_j} = -N_{beta_i, beta_j} */
    long long n_neg(int i, int j) const { return -n_pos(i, j); }

    /* d1(phi_gamma) = sum over a<b, a+b=gamma of N_{a,b} phi_a ^ phi_b,
       listed as (a, b, integer coefficient). */
    const std::vector<std::tuple<int, int, long long>>& d1_terms(int gamma) const {
        return d1_[static_cast<std::size_t>(gamma)];
    }

    /* coadjoint action: x_{-a}.phi_b = c phi_{b-a}; returns (index of b-a, c)
       or (-1, 0) when b-a is not a positive root. */
    std::pair<int, long long> ustar_action(int a, int b) const;

    /* max k with beta_j - k beta_i a root */
    int string_length(int i, int j) const;

  private:
    friend NilpotentAlgebra structure_constants(const RootSystem&, bool);
    std::vector<std::vector<int>> sum_;
    std::vector<std::vector<long long>> npos_;
    std::vector<std::vector<std::tuple<int, int, long long>>> d1_;
};

/* alt_order flips the tie-breaking order used to pick extraspecial pairs,
   producing a differently signed (but equally valid) basis. */
NilpotentAlgebra structure_constants(const RootSystem& R, bool alt_order = false);

} // namespace frobcoh
