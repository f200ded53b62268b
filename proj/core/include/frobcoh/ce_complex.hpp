#pragma once

#include <string>
#include <vector>

#include "frobcoh/chevalley.hpp"
#include "frobcoh/tchar.hpp"

namespace frobcoh {

enum class Coefficients { trivial, u_star };

/* T-character of H^n(u, k) resp. H^n(u, u*) over F_p, computed exactly
   from the weight-graded complex Lambda^*(u*) (x) M.  Weight blocks are
   independent and each one is a pair of small dense eliminations. */
TChar ce_cohomology(const NilpotentAlgebra& A, long long p, int n,
                    Coefficients coeff = Coefficients::trivial);

/* dim of a single weight block of H^n without assembling the full character */
long long ce_cohomology_dim_at(const NilpotentAlgebra& A, long long p, int n, const Weight& gamma,
                               Coefficients coeff = Coefficients::trivial);

/* sum over w of length n of the weight -w.0 */
TChar kostant_character(const RootSystem& R, int n);

struct KostantReport {
    int degree;
    bool match;
    TChar extra;   // computed but not predicted
    TChar missing; // predicted but not found
};

std::vector<KostantReport> kostant_check(const NilpotentAlgebra& A, long long p, int n_max);

/* Character of H^3(U_1,k) assembled as H^3(u,k) + (u*)^(1) (x) H^1(u,k).
   Gated by the decomposition's prime conditions unless force is set. */
TChar h3_U1_char(const NilpotentAlgebra& A, long long p, bool force = false);

/* H^1(u,u*), gated by the standing characteristic assumption. */
TChar h1_u_ustar(const NilpotentAlgebra& A, long long p, bool force = false);

/* The closed-form five-case table for H^1(u,u*). */
TChar h1_u_ustar_expected(const RootSystem& R);

/* Representative cocycles for one weight block, printable; for human
   inspection only (signs depend on the structure-constant convention). */
std::vector<std::string> ce_representatives(const NilpotentAlgebra& A, long long p, int n,
                                            const Weight& gamma,
                                            Coefficients coeff = Coefficients::trivial);

/* per-weight Euler characteristic of the full complex, independent of p */
long long lambda_euler_characteristic(const NilpotentAlgebra& A, const Weight& gamma);

/* checks d_{n+1} o d_n = 0 on every weight block */
bool ce_d_squared_is_zero(const NilpotentAlgebra& A, long long p, int n, Coefficients coeff);

} // namespace frobcoh
