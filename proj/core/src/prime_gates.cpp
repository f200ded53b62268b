#include "frobcoh/prime_gates.hpp"

namespace frobcoh {

GateResult gate_standing_assumption(const RootSystem& R, long long p) {
    char t = R.type_label;
    int n = R.rank_n;
    if (t == 'B' && n == 2) t = 'C'; // B_2 = C_2 falls under the A/C/D/E rule
    if (t == 'B' || t == 'F' || t == 'G') {
        if (p < 7)
            return {false, std::string("p >= 7 required for ") + R.user_label + std::to_string(n)};
        return {true, "p >= 7"};
    }
    if (p < 5) return {false, std::string("p >= 5 required for ") + R.user_label + std::to_string(n)};
    if (t == 'A' && n == 4 && p == 5) return {false, "p = 5 excluded for A4"};
    if (t == 'A' && n == 6 && p == 7) return {false, "p = 7 excluded for A6"};
    return {true, "p >= 5"};
}

GateResult gate_u1_decomposition(const RootSystem& R, long long p) {
    char t = R.type_label;
    int n = R.rank_n;
    if (t == 'B' && n == 2) t = 'C';
    if (t == 'B' || t == 'F' || t == 'G') {
        if (p < 7)
            return {false, std::string("p >= 7 required for ") + R.user_label + std::to_string(n)};
        return {true, "p >= 7"};
    }
    if (p < 5) return {false, std::string("p >= 5 required for ") + R.user_label + std::to_string(n)};
    return {true, "p >= 5"};
}

GateResult gate_kostant_degree3(const RootSystem& R, long long p) {
    char t = R.type_label;
    int n = R.rank_n;
    if (p < 3 || p % 2 == 0) return {false, "odd p >= 3 required"};
    long long need = 3;
    if (t == 'A' && n >= 4) need = 5;
    if (t == 'B' && n == 3) need = 5;
    if (t == 'B' && n >= 4) need = 7;
    if (t == 'C' && n >= 3) need = 5;
    if (t == 'D' || t == 'E') need = 5;
    if (t == 'F') need = 7;
    if (t == 'G') need = 5;
    if (p < need)
        return {false, std::string("p >= ") + std::to_string(need) + " required for " +
                           R.user_label + std::to_string(n)};
    return {true, "p >= " + std::to_string(need)};
}

bool is_good_prime(const RootSystem& R, long long p) {
    for (const Root& r : R.positive_roots)
        for (int c : r.pi)
            if (c != 0 && c % p == 0) return false;
    return true;
}

} // namespace frobcoh
