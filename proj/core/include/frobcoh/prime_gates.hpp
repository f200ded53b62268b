#pragma once

#include <string>

#include "frobcoh/root_system.hpp"

namespace frobcoh {

struct GateResult {
    bool admissible;
    std::string rule;
};

/* The standing characteristic assumption used by the closed-form
   classifiers: p >= 5 in types A, C, D, E (excluding A_4 with p = 5 and
   A_6 with p = 7), p >= 7 in types B_n (n >= 3), F_4, G_2. */
GateResult gate_standing_assumption(const RootSystem& R, long long p);

/* Conditions under which H^3(U_1,k) decomposes as
   H^3(u,k) + (u*)^(1) (x) H^1(u,k). */
GateResult gate_u1_decomposition(const RootSystem& R, long long p);

/* Conditions under which H^3(u,k) is the degree-3 Kostant character. */
GateResult gate_kostant_degree3(const RootSystem& R, long long p);

/* p divides no coefficient of a root written in the simple roots */
bool is_good_prime(const RootSystem& R, long long p);

} // namespace frobcoh
