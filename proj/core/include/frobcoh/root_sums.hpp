#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/root_system.hpp"

namespace frobcoh {

/* One witnessed instance of a root-sum equation
     alpha + sigma1 + sigma2 = (rhs terms) + p nu
   with alpha simple, sigma_i positive roots (or zero where the form
   allows it), and nu != 0.  Solutions re-validate by substitution on
   construction. */
struct RootSumSolution {
    enum class Kind { p_multiple, two_root, triple, simple_rhs };
    Kind kind;
    Weight alpha;
    Weight sigma1, sigma2; // zero allowed in the two_root form
    // (weight, coefficient) pairs; for two_root the first entry is the
    // simple root beta and the second the positive root sigma3
    std::vector<std::pair<Weight, long long>> rhs;
    Weight nu;

    bool validate(long long p) const;
    std::string str(const RootSystem& R) const;

    friend bool operator<(const RootSumSolution& a, const RootSumSolution& b) {
        auto ka = std::tie(a.kind, a.alpha, a.sigma1, a.sigma2, a.rhs, a.nu);
        auto kb = std::tie(b.kind, b.alpha, b.sigma1, b.sigma2, b.rhs, b.nu);
        return ka < kb;
    }
    friend bool operator==(const RootSumSolution& a, const RootSumSolution& b) {
        return !(a < b) && !(b < a);
    }
};

/* alpha + sigma1 + sigma2 in pX(T), all distinct positive, alpha simple */
std::vector<RootSumSolution> check_p_multiple(const RootSystem& R, long long p);

/* alpha + sigma1 + sigma2 = beta + sigma3 + p nu, nu in the root lattice */
std::vector<RootSumSolution> check_two_root_rhs(const RootSystem& R, long long p);

/* alpha + sigma1 + sigma2 = i1 b1 + i2 b2 + i3 b3 + p nu with distinct
   simple b_j, 0 <= i1,i2 < p, 0 <= i3 <= 1, nu in X(T) */
std::vector<RootSumSolution> check_triple_rhs(const RootSystem& R, long long p);

/* alpha + sigma1 + sigma2 = beta + p nu, beta simple, nu in X(T) */
std::vector<RootSumSolution> check_simple_rhs(const RootSystem& R, long long p);

/* The published exception catalogs, where stated: exact expected output
   of the corresponding enumerator at (R, p).  nullopt when no complete
   list is stated for that prime. */
std::optional<std::vector<RootSumSolution>> expected_catalog(const RootSystem& R, long long p,
                                                             RootSumSolution::Kind kind);

const char* kind_name(RootSumSolution::Kind k);

} // namespace frobcoh
