#pragma once

#include <vector>

#include "frobcoh/root_system.hpp"
#include "frobcoh/weight.hpp"

namespace frobcoh {

/* Weyl group element: canonical reduced word over simple-reflection
   indices plus its integer action matrix on omega-coordinates.
   In a product s_{i1}...s_{im} the rightmost reflection acts first. */
class WeylElement {
  public:
    std::vector<int> word;                        // 0-based reflection indices
    std::vector<std::vector<long long>> matrix;   // action on omega-coords

    std::size_t length() const { return word.size(); }

    Weight apply(const Weight& w) const;
    /* w . lambda = w(lambda + rho) - rho */
    Weight dot(const RootSystem& R, const Weight& lambda) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.matrix == b.matrix;
    }
};

WeylElement weyl_identity(const RootSystem& R);
WeylElement simple_reflection(const RootSystem& R, int i);
WeylElement weyl_word(const RootSystem& R, const std::vector<int>& word);

/* number of positive roots sent to negative ones */
int inversion_count(const RootSystem& R, const WeylElement& w);

/* All elements of the given length, BFS over the Cayley graph with
   deduplication by action matrix; deterministic order.  Empty when n
   exceeds the length of the longest element. */
std::vector<WeylElement> elements_of_length(const RootSystem& R, int n);

/* -w.0 as the telescoping sum s_1...s_{m-1}(beta_m) + ... + beta_1 */
Weight minus_dot_zero_telescoped(const RootSystem& R, const std::vector<int>& word);

/* coefficient of q^n in prod_i (1 + q + ... + q^{e_i}) */
long long poincare_coefficient(const RootSystem& R, int n);

} // namespace frobcoh
