#pragma once

#include <string>
#include <vector>

#include "frobcoh/classify.hpp"
#include "frobcoh/root_system.hpp"

namespace frobcoh {

/* dim H^0(nu) by Weyl's dimension formula, exact */
std::string weyl_dim_str(const RootSystem& R, const Weight& nu); // arbitrary precision, decimal
long long weyl_dim(const RootSystem& R, const Weight& nu);       // throws on overflow

/* Good filtration data for H^3(G_r, H^0(lambda))^(-r): the multiset of
   induced factors H^0(mu), their total dimension, and the weights that
   were dropped because all their induced sheaves vanish. */
struct GoodFiltration {
    std::vector<std::pair<Weight, long long>> factors; // dominant mu with multiplicity
    std::string total_dim;                             // sum of Weyl dimensions, decimal
    std::vector<Weight> dropped;                       // pair to -1 against some simple coroot
    CohClass source;
};

/* From the B_r classification of lambda: Line -> that many copies of
   H^0(nu); UStarTensor -> { H^0(beta+nu) : beta positive, beta+nu
   dominant }.  Every dropped weight must pair to -1 against some simple
   coroot, else FiltrationViolation. */
GoodFiltration good_filtration_factors(const RootSystem& R, const Weight& lambda, int r,
                                       long long p, bool force = false);

} // namespace frobcoh
