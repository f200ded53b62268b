#include "frobcoh/restricted_algebra.hpp"

#include <algorithm>
#include <cassert>

#include "frobcoh/errors.hpp"
#include "frobcoh/fp.hpp"

namespace frobcoh {

namespace {

long long powll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void combo_add(FiniteGradedAlgebra::Combo& a, const FiniteGradedAlgebra::Combo& b,
               std::int64_t scale, long long p) {
    for (const auto& [m, c] : b) {
        std::int64_t v = ((a[m] + c * scale) % p + p) % p;
        if (v == 0)
            a.erase(m);
        else
            a[m] = v;
    }
}

} // namespace

std::vector<int> FiniteGradedAlgebra::exponents_of(int m) const {
    std::vector<int> e(num_vars());
    long long x = m;
    for (std::size_t v = 0; v < num_vars(); ++v) {
        e[v] = static_cast<int>(x % p_);
        x /= p_;
    }
    return e;
}

int FiniteGradedAlgebra::index_of(const std::vector<int>& exps) const {
    long long m = 0;
    for (std::size_t v = num_vars(); v-- > 0;) m = m * p_ + exps[v];
    return static_cast<int>(m);
}

const FiniteGradedAlgebra::Combo& FiniteGradedAlgebra::mul_var(int v, int m) const {
    auto key = std::make_pair(v, m);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;

    Combo out;
    std::vector<int> e = exponents_of(m);
    int j = -1;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) {
            j = static_cast<int>(i);
            break;
        }
    if (j < 0 || v <= j || commutative_) {
        // already ordered; bump the exponent, truncating at p
        if (e[static_cast<std::size_t>(v)] + 1 < p_) {
            ++e[static_cast<std::size_t>(v)];
            out[index_of(e)] = 1;
        }
    } else {
        // x_v x_j^{a} ...: pull one x_j out front
        std::vector<int> em = e;
        --em[static_cast<std::size_t>(j)];
        int mprime = index_of(em);
        // x_v . m = x_j . (x_v . m') + [x_v, x_j] . m'
        Combo inner = mul_var(v, mprime);
        for (const auto& [t, c] : inner) combo_add(out, mul_var(j, t), c, p_);
        const auto& [k, cb] = bracket_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
        if (k >= 0 && cb != 0) combo_add(out, mul_var(k, mprime), cb, p_);
    }
    return mul_memo_.emplace(key, std::move(out)).first->second;
}

FiniteGradedAlgebra::Combo FiniteGradedAlgebra::mul_mono(int m, const Combo& w) const {
    Combo cur = w;
    std::vector<int> e = exponents_of(m);
    for (std::size_t v = num_vars(); v-- > 0;) {
        for (int rep = 0; rep < e[v]; ++rep) {
            Combo next;
            for (const auto& [t, c] : cur) combo_add(next, mul_var(static_cast<int>(v), t), c, p_);
            cur = std::move(next);
        }
    }
    return cur;
}

FiniteGradedAlgebra::Combo FiniteGradedAlgebra::mul(const Combo& a, const Combo& b) const {
    Combo out;
    for (const auto& [m, c] : a) combo_add(out, mul_mono(m, b), c, p_);
    return out;
}

bool FiniteGradedAlgebra::associativity_check(std::size_t exhaustive_cutoff, int samples) const {
    std::size_t n = dim();
    auto check_one = [&](int i, int j, int k) {
        Combo ej{{j, 1}}, ek{{k, 1}};
        Combo jk = mul_mono(j, ek);
        Combo left = mul_mono(i, jk);
        Combo ij = mul_mono(i, ej);
        Combo right = mul(ij, ek);
        return left == right;
    };
    if (n <= exhaustive_cutoff) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!check_one(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)))
                        return false;
        return true;
    }
    unsigned long long st = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&]() {
        st = st * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::size_t>(st >> 33);
    };
    for (int t = 0; t < samples; ++t)
        if (!check_one(static_cast<int>(rnd() % n), static_cast<int>(rnd() % n),
                       static_cast<int>(rnd() % n)))
            return false;
    return true;
}

FiniteGradedAlgebra FiniteGradedAlgebra::restricted_enveloping(const NilpotentAlgebra& A,
                                                               long long p) {
    FiniteGradedAlgebra F;
    F.p_ = p;
    F.commutative_ = false;
    int N = static_cast<int>(A.dim());
    for (int i = 0; i < N; ++i) F.var_weight_.push_back(-A.R.root(i).omega);
    F.bracket_.assign(static_cast<std::size_t>(N), {});
    for (int v = 0; v < N; ++v) {
        F.bracket_[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(N), {-1, 0});
        for (int j = 0; j < N; ++j) {
            int k = A.sum_index(v, j);
            if (k < 0) continue;
            // [x_{-v}, x_{-j}] = -N_{v,j} x_{-(v+j)}
            std::int64_t c = ((-A.n_pos(v, j)) % p + p) % p;
            F.bracket_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = {k, c};
        }
    }
    long long d = powll(p, N);
    F.mono_weight_.resize(static_cast<std::size_t>(d), Weight(A.R.rank()));
    for (long long m = 0; m < d; ++m) {
        Weight w(A.R.rank());
        long long x = m;
        for (int v = 0; v < N; ++v) {
            int e = static_cast<int>(x % p);
            x /= p;
            if (e) w += static_cast<long long>(e) * F.var_weight_[static_cast<std::size_t>(v)];
        }
        F.mono_weight_[static_cast<std::size_t>(m)] = w;
    }
    return F;
}

FiniteGradedAlgebra FiniteGradedAlgebra::truncated_divided_powers(const RootSystem& R1, long long p,
                                                                  int r) {
    assert(R1.rank() == 1);
    FiniteGradedAlgebra F;
    F.p_ = p;
    F.commutative_ = true;
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        F.var_weight_.push_back(-(q * R1.simple_root(0)));
        q *= p;
    }
    F.bracket_.assign(static_cast<std::size_t>(r),
                      std::vector<std::pair<int, std::int64_t>>(static_cast<std::size_t>(r), {-1, 0}));
    long long d = powll(p, r);
    F.mono_weight_.resize(static_cast<std::size_t>(d), Weight(1));
    for (long long m = 0; m < d; ++m) {
        Weight w(1);
        long long x = m;
        for (int v = 0; v < r; ++v) {
            int e = static_cast<int>(x % p);
            x /= p;
            if (e) w += static_cast<long long>(e) * F.var_weight_[static_cast<std::size_t>(v)];
        }
        F.mono_weight_[static_cast<std::size_t>(m)] = w;
    }
    return F;
}

MinimalResolution::MinimalResolution(const FiniteGradedAlgebra& A, int depth) : A_(A) {
    long long p = A.p();
    gen_weights_.push_back({Weight(A.rank())}); // P_0 = A
    gen_images_.push_back({});

    // current syzygy module Omega, per weight: a basis of vectors in the
    // free module on the previous generators
    std::map<Weight, std::vector<FreeVec>> omega;
    for (int m = 1; m < static_cast<int>(A.dim()); ++m) // augmentation ideal
        omega[A.mono_weight(m)].push_back(FreeVec{{{m, 0}, 1}});

    for (int level = 1; level <= depth; ++level) {
        // generators: a basis of Omega / I Omega, chosen per weight
        std::vector<Weight> gw;
        std::vector<FreeVec> gimg;
        for (const auto& [mu, vecs] : omega) {
            // index the free-module basis elements present at this weight
            std::map<std::pair<int, int>, std::size_t> col;
            auto col_of = [&](const FreeVec& v) {
                for (const auto& [mg, c] : v)
                    if (!col.count(mg)) {
                        std::size_t next = col.size();
                        col[mg] = next;
                    }
            };
            for (const FreeVec& v : vecs) col_of(v);
            // span of I.Omega at mu: x_var . (Omega at mu - wt(var))
            std::vector<FreeVec> ivecs;
            for (std::size_t var = 0; var < A.num_vars(); ++var) {
                Weight nu = mu - A.var_weight(static_cast<int>(var));
                auto it = omega.find(nu);
                if (it == omega.end()) continue;
                for (const FreeVec& v : it->second) {
                    FreeVec xv;
                    for (const auto& [mg, c] : v)
                        for (const auto& [t, cc] : A.mul_var(static_cast<int>(var), mg.first)) {
                            auto key = std::make_pair(t, mg.second);
                            std::int64_t nv = ((xv[key] + c * cc) % p + p) % p;
                            if (nv == 0)
                                xv.erase(key);
                            else
                                xv[key] = nv;
                        }
                    if (!xv.empty()) {
                        col_of(xv);
                        ivecs.push_back(std::move(xv));
                    }
                }
            }
            FpRowSpace span(p, col.size());
            auto to_dense = [&](const FreeVec& v) {
                std::vector<std::int64_t> d(col.size(), 0);
                for (const auto& [mg, c] : v) d[col.at(mg)] = c;
                return d;
            };
            for (const FreeVec& v : ivecs) span.insert(to_dense(v));
            for (const FreeVec& v : vecs)
                if (span.insert(to_dense(v))) {
                    gw.push_back(mu);
                    gimg.push_back(v);
                }
        }
        gen_weights_.push_back(gw);
        gen_images_.push_back(gimg);
        if (level == depth) break;

        // next syzygies: kernel of (A^{gw} -> previous module), per weight
        std::map<Weight, std::vector<FreeVec>> next;
        // bucket the free-module basis (mono, gen) by weight
        std::map<Weight, std::vector<std::pair<int, int>>> pbasis;
        for (std::size_t g = 0; g < gw.size(); ++g)
            for (int m = 0; m < static_cast<int>(A.dim()); ++m)
                pbasis[A.mono_weight(m) + gw[g]].push_back({m, static_cast<int>(g)});
        for (const auto& [mu, cols] : pbasis) {
            // images m . gimg[g] live in the previous free module at mu
            std::map<std::pair<int, int>, std::size_t> row;
            std::vector<FreeVec> images(cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto [m, g] = cols[c];
                FreeVec img;
                for (const auto& [mg, cc] : gimg[static_cast<std::size_t>(g)]) {
                    FiniteGradedAlgebra::Combo prod =
                        A.mul_mono(m, FiniteGradedAlgebra::Combo{{mg.first, 1}});
                    for (const auto& [t, tc] : prod) {
                        auto key = std::make_pair(t, mg.second);
                        std::int64_t nv = ((img[key] + cc * tc) % p + p) % p;
                        if (nv == 0)
                            img.erase(key);
                        else
                            img[key] = nv;
                    }
                }
                for (const auto& [mg, cc] : img)
                    if (!row.count(mg)) {
                        std::size_t nxt = row.size();
                        row[mg] = nxt;
                    }
                images[c] = std::move(img);
            }
            FpMat mat(p, std::max<std::size_t>(row.size(), 1), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (const auto& [mg, cc] : images[c]) mat.add_at(row.at(mg), c, cc);
            for (const auto& k : mat.kernel_basis()) {
                FreeVec v;
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (k[c]) v[cols[c]] = k[c];
                next[mu].push_back(std::move(v));
            }
        }
        omega = std::move(next);
    }
}

TChar MinimalResolution::ext_char(int n) const {
    TChar out;
    if (n < 0 || n >= static_cast<int>(gen_weights_.size())) return out;
    for (const Weight& w : gen_weights_[static_cast<std::size_t>(n)]) out.add(-w, 1);
    return out;
}

TChar MinimalResolution::ext_char_with_coefficients(
    int n, const std::vector<Weight>& m_weights,
    const std::vector<std::vector<std::vector<std::int64_t>>>& action) const {
    long long p = A_.p();
    std::size_t dm = m_weights.size();
    // act(mono) . vec for a dense module vector
    auto act_mono = [&](int mono, std::vector<std::int64_t> vec) {
        std::vector<int> e = A_.exponents_of(mono);
        for (std::size_t v = A_.num_vars(); v-- > 0;)
            for (int rep = 0; rep < e[v]; ++rep) {
                std::vector<std::int64_t> nxt(dm, 0);
                for (std::size_t i = 0; i < dm; ++i) {
                    if (vec[i] == 0) continue;
                    for (std::size_t j = 0; j < dm; ++j) {
                        std::int64_t a = action[v][j][i];
                        if (a) nxt[j] = ((nxt[j] + a * vec[i]) % p + p) % p;
                    }
                }
                vec = std::move(nxt);
            }
        return vec;
    };
    // C^n component basis: (gen g, module basis i), weight m_weights[i] - wt(e_g);
    // differential (df)(e'_h) = sum over entries ((mono,g),c) of d e'_h of c * mono . f_g
    auto hom_basis = [&](int level) {
        std::map<Weight, std::vector<std::pair<int, int>>> out;
        if (level < 0 || level >= static_cast<int>(gen_weights_.size())) return out;
        const auto& gws = gen_weights_[static_cast<std::size_t>(level)];
        for (std::size_t g = 0; g < gws.size(); ++g)
            for (std::size_t i = 0; i < dm; ++i)
                out[m_weights[i] - gws[g]].push_back({static_cast<int>(g), static_cast<int>(i)});
        return out;
    };
    auto diff_rank = [&](int level, const Weight& mu, const std::vector<std::pair<int, int>>& cols,
                         const std::vector<std::pair<int, int>>& rows) -> std::size_t {
        // d: C^{level} -> C^{level+1}
        if (cols.empty() || rows.empty()) return 0;
        if (level + 1 >= static_cast<int>(gen_images_.size())) return 0;
        (void)mu;
        std::map<std::pair<int, int>, std::size_t> rix;
        for (std::size_t r = 0; r < rows.size(); ++r) rix[rows[r]] = r;
        FpMat mat(p, rows.size(), cols.size());
        const auto& imgs = gen_images_[static_cast<std::size_t>(level + 1)];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto [g, i] = cols[c];
            // f has f_g = e_i, other components zero
            for (std::size_t h = 0; h < imgs.size(); ++h) {
                for (const auto& [mg, cc] : imgs[h]) {
                    if (mg.second != g) continue;
                    std::vector<std::int64_t> vec(dm, 0);
                    vec[static_cast<std::size_t>(i)] = 1;
                    vec = act_mono(mg.first, std::move(vec));
                    for (std::size_t j = 0; j < dm; ++j) {
                        if (vec[j] == 0) continue;
                        auto it = rix.find({static_cast<int>(h), static_cast<int>(j)});
                        if (it == rix.end()) continue;
                        mat.add_at(it->second, c, cc * vec[j]);
                    }
                }
            }
        }
        return mat.rank();
    };
    auto bn = hom_basis(n);
    auto bdown = hom_basis(n - 1);
    auto bup = hom_basis(n + 1);
    TChar out;
    for (const auto& [mu, cols] : bn) {
        static const std::vector<std::pair<int, int>> kEmpty;
        const auto& rows = bup.count(mu) ? bup.at(mu) : kEmpty;
        const auto& prev = bdown.count(mu) ? bdown.at(mu) : kEmpty;
        std::size_t rk_up = diff_rank(n, mu, cols, rows);
        std::size_t rk_dn = diff_rank(n - 1, mu, prev, cols);
        long long mult = static_cast<long long>(cols.size()) - static_cast<long long>(rk_up) -
                         static_cast<long long>(rk_dn);
        assert(mult >= 0);
        if (mult > 0) out.add(mu, mult);
    }
    return out;
}

namespace {

void check_envelope(const RootSystem& R, long long p, int r, int n) {
    if (n < 0 || n > 3) throw ScopeExceededError("oracle supports degrees 0..3");
    if (p > 5) throw ScopeExceededError("oracle supports p <= 5");
    bool a1 = R.type_label == 'A' && R.rank_n == 1;
    bool rank2 = (R.type_label == 'A' || R.type_label == 'B') && R.rank_n == 2;
    if (a1) {
        if (r < 1 || r > 3) throw ScopeExceededError("A1 oracle supports r <= 3");
    } else if (rank2) {
        if (r != 1) throw ScopeExceededError("rank-2 oracle supports r = 1 only");
    } else {
        throw ScopeExceededError("oracle envelope is A1, A2, B2");
    }
}

MinimalResolution resolve(const RootSystem& R, long long p, int r, int depth) {
    if (R.rank_n == 1 && r >= 2) {
        FiniteGradedAlgebra F = FiniteGradedAlgebra::truncated_divided_powers(R, p, r);
        if (!F.associativity_check()) throw ScopeExceededError("multiplication table inconsistent");
        return MinimalResolution(F, depth);
    }
    NilpotentAlgebra A = structure_constants(R);
    FiniteGradedAlgebra F = FiniteGradedAlgebra::restricted_enveloping(A, p);
    if (!F.associativity_check()) throw ScopeExceededError("multiplication table inconsistent");
    return MinimalResolution(F, depth);
}

} // namespace

TChar restricted_ext(const RootSystem& R, long long p, int r, int n) {
    check_envelope(R, p, r, n);
    MinimalResolution res = resolve(R, p, r, n);
    return res.ext_char(n);
}

BrOracleResult br_cohomology_oracle(const RootSystem& R, long long p, int r, int n,
                                    const Weight& lambda) {
    check_envelope(R, p, r, n);
    long long q = powll(p, r);
    TChar hn = restricted_ext(R, p, r, n);
    BrOracleResult out{0, {}};
    for (const auto& [mu, mult] : hn.entries()) {
        Weight s = mu + lambda;
        if (!s.divisible_by(q)) continue;
        out.dim += mult;
        out.weights.add(s, mult);
    }
    return out;
}

TChar u1_ustar_oracle(const NilpotentAlgebra& A, long long p, int n) {
    FiniteGradedAlgebra F = FiniteGradedAlgebra::restricted_enveloping(A, p);
    MinimalResolution res(F, n + 1);
    int N = static_cast<int>(A.dim());
    std::vector<Weight> mw;
    for (int i = 0; i < N; ++i) mw.push_back(A.R.root(i).omega);
    // action of x_{-a} on phi_b: column b of matrix `a`
    std::vector<std::vector<std::vector<std::int64_t>>> act(
        static_cast<std::size_t>(N),
        std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(N),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(N), 0)));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            auto [tgt, c] = A.ustar_action(a, b);
            if (tgt >= 0)
                act[static_cast<std::size_t>(a)][static_cast<std::size_t>(tgt)]
                   [static_cast<std::size_t>(b)] = ((c % p) + p) % p;
        }
    return res.ext_char_with_coefficients(n, mw, act);
}

} // namespace frobcoh
