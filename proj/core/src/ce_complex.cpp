#include "frobcoh/ce_complex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "frobcoh/errors.hpp"
#include "frobcoh/fp.hpp"
#include "frobcoh/prime_gates.hpp"
#include "frobcoh/weyl.hpp"

namespace frobcoh {

namespace {

using Mask = std::uint64_t;

/* basis element of Lambda^n(u*) (x) M: root subset plus, for u* coefficients,
   the index of the phi spanning the coefficient line (-1 for trivial) */
struct Elem {
    Mask mask;
    int v;
    friend bool operator<(const Elem& a, const Elem& b) {
        return a.mask != b.mask ? a.mask < b.mask : a.v < b.v;
    }
};

struct Term {
    Elem e;
    long long c; // over Z
};

int popcount(Mask m) { return __builtin_popcountll(m); }

/* sign of the permutation sorting `word` ascending; 0 on duplicates */
int sort_sign(std::vector<int>& word) {
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] == word[j]) return 0;
            if (word[i] > word[j]) {
                std::swap(word[i], word[j]);
                sign = -sign;
            }
        }
    return sign;
}

struct Complex {
    const NilpotentAlgebra& A;
    Coefficients coeff;
    int nroots;
    std::vector<Weight> root_weight;

    Complex(const NilpotentAlgebra& a, Coefficients c)
        : A(a), coeff(c), nroots(static_cast<int>(a.dim())) {
        for (int i = 0; i < nroots; ++i) root_weight.push_back(A.R.root(i).omega);
    }

    Weight weight_of(const Elem& e) const {
        Weight w(A.R.rank());
        for (int i = 0; i < nroots; ++i)
            if (e.mask >> i & 1) w += root_weight[static_cast<std::size_t>(i)];
        if (e.v >= 0) w += root_weight[static_cast<std::size_t>(e.v)];
        return w;
    }

    /* all degree-n basis elements bucketed by weight */
    std::map<Weight, std::vector<Elem>> basis(int n) const {
        std::map<Weight, std::vector<Elem>> out;
        if (n < 0 || n > nroots) return out;
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Mask m = 0;
            for (int i : idx) m |= Mask(1) << i;
            if (coeff == Coefficients::trivial) {
                Elem e{m, -1};
                out[weight_of(e)].push_back(e);
            } else {
                for (int v = 0; v < nroots; ++v) {
                    Elem e{m, v};
                    out[weight_of(e)].push_back(e);
                }
            }
            // next combination
            int k = n - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == nroots - n + k) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int i = k + 1; i < n; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
        return out;
    }

    /* differential of a basis element, coefficients over Z */
    std::vector<Term> d(const Elem& e) const {
        std::vector<Term> out;
        std::vector<int> bits;
        for (int i = 0; i < nroots; ++i)
            if (e.mask >> i & 1) bits.push_back(i);
        // Koszul part: replace the j-th factor by its d1 expansion
        for (std::size_t j = 0; j < bits.size(); ++j) {
            int g = bits[static_cast<std::size_t>(j)];
            long long outer = (j % 2 == 0) ? 1 : -1;
            for (const auto& [a, b, c] : A.d1_terms(g)) {
                std::vector<int> word;
                for (std::size_t k = 0; k < bits.size(); ++k) {
                    if (k == j) {
                        word.push_back(a);
                        word.push_back(b);
                    } else {
                        word.push_back(bits[k]);
                    }
                }
                int s = sort_sign(word);
                if (s == 0) continue;
                Mask m = 0;
                for (int i : word) m |= Mask(1) << i;
                out.push_back({Elem{m, e.v}, outer * s * c});
            }
        }
        // action part for u* coefficients
        if (e.v >= 0) {
            for (int a = 0; a < nroots; ++a) {
                if (e.mask >> a & 1) continue;
                auto [tgt, c] = A.ustar_action(a, e.v);
                if (tgt < 0 || c == 0) continue;
                int below = popcount(e.mask & ((Mask(1) << a) - 1));
                long long s = (below % 2 == 0) ? 1 : -1;
                out.push_back({Elem{e.mask | (Mask(1) << a), tgt}, s * c});
            }
        }
        // merge duplicate targets
        std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
        std::vector<Term> merged;
        for (const Term& t : out) {
            if (!merged.empty() && !(merged.back().e < t.e) && !(t.e < merged.back().e))
                merged.back().c += t.c;
            else
                merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Term& t) { return t.c == 0; }),
                     merged.end());
        return merged;
    }

    /* rank over F_p of d restricted to the span of `cols`, with rows
       indexed by the degree-(n+1) basis of the same weight */
    std::size_t block_rank(long long p, const std::vector<Elem>& cols,
                           const std::vector<Elem>& rows) const {
        if (cols.empty() || rows.empty()) return 0;
        std::map<Elem, std::size_t> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
        FpMat mat(p, rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const Term& t : d(cols[c])) {
                auto it = row_index.find(t.e);
                assert(it != row_index.end() && "differential must preserve the weight block");
                mat.add_at(it->second, c, t.c % p);
            }
        return mat.rank();
    }
};

void check_degree(const NilpotentAlgebra& A, int n, Coefficients coeff) {
    (void)A;
    (void)coeff;
    // degrees above the top of the complex are fine (the groups vanish)
    if (n < 0) throw DegreeOutOfRangeError("negative degree " + std::to_string(n));
}

} // namespace

TChar ce_cohomology(const NilpotentAlgebra& A, long long p, int n, Coefficients coeff) {
    check_degree(A, n, coeff);
    Complex C(A, coeff);
    auto bn = C.basis(n);
    auto bup = C.basis(n + 1);
    auto bdown = C.basis(n - 1);
    static const std::vector<Elem> kEmpty;
    TChar out;
    for (const auto& [gamma, cols] : bn) {
        auto up_it = bup.find(gamma);
        auto down_it = bdown.find(gamma);
        const auto& rows = up_it == bup.end() ? kEmpty : up_it->second;
        const auto& prev = down_it == bdown.end() ? kEmpty : down_it->second;
        std::size_t rank_n = C.block_rank(p, cols, rows);
        std::size_t rank_prev = C.block_rank(p, prev, cols);
        long long mult = static_cast<long long>(cols.size()) - static_cast<long long>(rank_n) -
                         static_cast<long long>(rank_prev);
        assert(mult >= 0);
        if (mult > 0) out.add(gamma, mult);
    }
    return out;
}

long long ce_cohomology_dim_at(const NilpotentAlgebra& A, long long p, int n, const Weight& gamma,
                               Coefficients coeff) {
    return ce_cohomology(A, p, n, coeff).mult(gamma);
}

TChar kostant_character(const RootSystem& R, int n) {
    TChar out;
    for (const WeylElement& w : elements_of_length(R, n))
        out.add(-w.dot(R, Weight(R.rank())), 1);
    return out;
}

std::vector<KostantReport> kostant_check(const NilpotentAlgebra& A, long long p, int n_max) {
    std::vector<KostantReport> out;
    for (int n = 0; n <= n_max; ++n) {
        TChar computed = ce_cohomology(A, p, n, Coefficients::trivial);
        TChar predicted = kostant_character(A.R, n);
        KostantReport rep;
        rep.degree = n;
        rep.extra = computed.minus_clamped(predicted);
        rep.missing = predicted.minus_clamped(computed);
        rep.match = rep.extra.empty() && rep.missing.empty();
        out.push_back(std::move(rep));
    }
    return out;
}

TChar h3_U1_char(const NilpotentAlgebra& A, long long p, bool force) {
    GateResult gate = gate_u1_decomposition(A.R, p);
    if (!gate.admissible && !force) throw PrimeGateError(gate.rule);
    TChar h3 = ce_cohomology(A, p, 3, Coefficients::trivial); // empty in rank 1
    TChar h1 = ce_cohomology(A, p, 1, Coefficients::trivial);
    TChar ustar_twisted;
    for (std::size_t i = 0; i < A.dim(); ++i)
        ustar_twisted.add(p * A.R.root(static_cast<int>(i)).omega, 1);
    return h3 + ustar_twisted.tensor(h1);
}

TChar h1_u_ustar(const NilpotentAlgebra& A, long long p, bool force) {
    GateResult gate = gate_standing_assumption(A.R, p);
    if (!gate.admissible && !force) throw PrimeGateError(gate.rule);
    return ce_cohomology(A, p, 1, Coefficients::u_star);
}

TChar h1_u_ustar_expected(const RootSystem& R) {
    TChar out;
    int n = R.rank_n;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            Weight lam = R.simple_root(a) + R.simple_root(b);
            bool is_root = R.is_positive_root(lam);
            out.add(lam, is_root ? 1 : 2);
        }
        out.add(2 * R.simple_root(a), 1);
    }
    // -s_a s_b . 0 for ordered adjacent pairs
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (!R.is_positive_root(R.simple_root(a) + R.simple_root(b))) continue;
            WeylElement w = weyl_word(R, {a, b});
            out.add(-w.dot(R, Weight(R.rank())), 1);
        }
    return out;
}

std::vector<std::string> ce_representatives(const NilpotentAlgebra& A, long long p, int n,
                                            const Weight& gamma, Coefficients coeff) {
    check_degree(A, n, coeff);
    Complex C(A, coeff);
    auto bn = C.basis(n);
    auto it = bn.find(gamma);
    if (it == bn.end()) return {};
    const auto& cols = it->second;
    auto bup = C.basis(n + 1);
    auto bdown = C.basis(n - 1);
    static const std::vector<Elem> kEmpty;
    const auto& rows = bup.count(gamma) ? bup[gamma] : kEmpty;
    const auto& prev = bdown.count(gamma) ? bdown[gamma] : kEmpty;

    // kernel of d_n on the block
    std::map<Elem, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    FpMat mat(p, std::max<std::size_t>(rows.size(), 1), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const Term& t : C.d(cols[c])) mat.add_at(row_index.at(t.e), c, t.c % p);
    auto kernel = mat.kernel_basis();

    // image of d_{n-1}, echelonized; then keep kernel vectors extending it
    FpRowSpace span(p, cols.size());
    std::map<Elem, std::size_t> col_index;
    for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = c;
    for (const Elem& e : prev) {
        std::vector<int64_t> v(cols.size(), 0);
        for (const Term& t : C.d(e))
            v[col_index.at(t.e)] = (((v[col_index.at(t.e)] + t.c) % p) + p) % p;
        span.insert(std::move(v));
    }
    std::vector<std::string> reps;
    for (const auto& k : kernel) {
        if (!span.insert(k)) continue;
        std::ostringstream os;
        bool first = true;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (k[c] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (k[c] != 1) os << k[c] << "*";
            bool fst = true;
            for (int i = 0; i < C.nroots; ++i)
                if (cols[c].mask >> i & 1) {
                    if (!fst) os << "^";
                    fst = false;
                    os << "phi[";
                    const auto& pi = A.R.root(i).pi;
                    for (std::size_t q = 0; q < pi.size(); ++q)
                        os << (q ? "," : "") << pi[q];
                    os << "]";
                }
            if (cols[c].v >= 0) {
                os << (cols[c].mask ? "(x)" : "") << "phi[";
                const auto& pi = A.R.root(cols[c].v).pi;
                for (std::size_t q = 0; q < pi.size(); ++q) os << (q ? "," : "") << pi[q];
                os << "]";
            }
        }
        reps.push_back(os.str());
    }
    return reps;
}

bool ce_d_squared_is_zero(const NilpotentAlgebra& A, long long p, int n, Coefficients coeff) {
    Complex C(A, coeff);
    auto bn = C.basis(n);
    for (const auto& [gamma, cols] : bn) {
        for (const Elem& e : cols) {
            std::map<Elem, long long> dd;
            for (const Term& t : C.d(e))
                for (const Term& u : C.d(t.e)) dd[u.e] += t.c % p * (u.c % p);
            for (const auto& [tgt, c] : dd)
                if (c % p != 0) return false;
        }
    }
    return true;
}

long long lambda_euler_characteristic(const NilpotentAlgebra& A, const Weight& gamma) {
    int N = static_cast<int>(A.dim());
    assert(N <= 20 && "full complex enumeration only for small systems");
    long long chi = 0;
    for (Mask m = 0; m < (Mask(1) << N); ++m) {
        Weight w(A.R.rank());
        for (int i = 0; i < N; ++i)
            if (m >> i & 1) w += A.R.root(i).omega;
        if (w == gamma) chi += popcount(m) % 2 == 0 ? 1 : -1;
    }
    return chi;
}

} // namespace frobcoh
