#include "frobcoh/chevalley.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace frobcoh {

namespace {

/* signed root: positive-root index plus a sign */
struct SRoot {
    int idx;
    int sign;
};

struct Builder {
    const RootSystem& R;
    bool alt_order;
    std::vector<long long> norm2;          // <beta,beta> per positive root
    std::vector<std::vector<int>> sum;     // index of beta_i+beta_j or -1
    std::vector<std::vector<long long>> n; // N_{i,j} for i,j positive, antisymmetric

    explicit Builder(const RootSystem& r, bool alt) : R(r), alt_order(alt) {
        std::size_t m = R.num_positive_roots();
        norm2.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            const Root& rt = R.positive_roots[k];
            long long s = 0;
            for (std::size_t i = 0; i < R.rank(); ++i)
                s += static_cast<long long>(rt.pi[i]) * R.d[i] * rt.omega[i];
            norm2[k] = s;
        }
        sum.assign(m, std::vector<int>(m, -1));
        n.assign(m, std::vector<long long>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                Weight s = R.positive_roots[i].omega + R.positive_roots[j].omega;
                auto idx = R.signed_root_index(s);
                if (idx && idx->second > 0) sum[i][j] = idx->first;
            }
    }

    /* order used only to pick extraspecial pairs */
    bool before(int a, int b) const { return alt_order ? a > b : a < b; }

    int string_len(int a, int b) const {
        // max k with beta_b - k beta_a in Phi
        Weight w = R.positive_roots[static_cast<std::size_t>(b)].omega;
        const Weight& alpha = R.positive_roots[static_cast<std::size_t>(a)].omega;
        int k = 0;
        while (true) {
            w -= alpha;
            if (!R.signed_root_index(w)) break;
            ++k;
        }
        return k;
    }

    long long norm2_of(const Weight& w) const {
        auto idx = R.signed_root_index(w);
        assert(idx);
        return norm2[static_cast<std::size_t>(idx->first)];
    }

    /* N for arbitrary signed roots, via Carter's three-term relation;
       assumes the positive-pair table is filled for all sums of height
       below the current target. */
    long long nval(SRoot x, SRoot y) const {
        Weight wx = x.sign * R.positive_roots[static_cast<std::size_t>(x.idx)].omega;
        Weight wy = y.sign * R.positive_roots[static_cast<std::size_t>(y.idx)].omega;
        Weight ws = wx + wy;
        auto z = R.signed_root_index(ws);
        if (!z) return 0;
        if (x.sign > 0 && y.sign > 0) return n[static_cast<std::size_t>(x.idx)][static_cast<std::size_t>(y.idx)];
        if (x.sign < 0 && y.sign < 0)
            return -n[static_cast<std::size_t>(x.idx)][static_cast<std::size_t>(y.idx)];
        if (x.sign < 0) return -nval(y, x);
        // x positive, y negative
        if (z->second > 0) {
            // triple (x, y, -z): N_{x,y} = (|z|^2/|x|^2) N_{y,-z},
            // and N_{y,-z} = -N_{-y,z} for the positive pair (-y, z).
            long long num = -norm2[static_cast<std::size_t>(z->first)] *
                            n[static_cast<std::size_t>(y.idx)][static_cast<std::size_t>(z->first)];
            long long den = norm2[static_cast<std::size_t>(x.idx)];
            assert(num % den == 0);
            return num / den;
        }
        return -nval(SRoot{x.idx, -1}, SRoot{y.idx, +1});
    }

    void build() {
        std::size_t m = R.num_positive_roots();
        // process target roots in height order (the canonical root order)
        for (std::size_t g = 0; g < m; ++g) {
            // decompositions gamma = beta_a + beta_b with before(a,b)
            std::vector<std::pair<int, int>> specials;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    if (!before(static_cast<int>(a), static_cast<int>(b))) continue;
                    if (sum[a][b] == static_cast<int>(g))
                        specials.push_back({static_cast<int>(a), static_cast<int>(b)});
                }
            if (specials.empty()) continue;
            // extraspecial pair: minimal first component
            std::pair<int, int> xs = specials[0];
            for (const auto& pr : specials)
                if (before(pr.first, xs.first)) xs = pr;
            auto [eps, del] = xs;
            long long nxs = string_len(eps, del) + 1;
            n[static_cast<std::size_t>(eps)][static_cast<std::size_t>(del)] = nxs;
            n[static_cast<std::size_t>(del)][static_cast<std::size_t>(eps)] = -nxs;
            for (const auto& [a, b] : specials) {
                if (a == eps && b == del) continue;
                // Jacobi on (x_eps, x_del, x_{-a}), all terms in the root
                // space of beta_b:
                //   N(del,-a) N(eps,del-a) + N(-a,eps) N(del,eps-a)
                //     + N(eps,del) N(-a,gamma) = 0
                // with N(-a,gamma) = (|beta_b|^2/|gamma|^2) N(a,b).
                long long t1 = nval({del, +1}, {a, -1}) * nval_pos_with(eps, del, a);
                long long t2 = nval({a, -1}, {eps, +1}) * nval_pos_with(del, eps, a);
                long long num = -(t1 + t2) * norm2[static_cast<std::size_t>(g)];
                long long den = norm2[static_cast<std::size_t>(b)] * nxs;
                if (num % den != 0)
                    throw std::logic_error("structure constant recursion not integral");
                n[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = num / den;
                n[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -num / den;
            }
        }
    }

    /* N(beta_first, beta_second - beta_a), the second argument being an
       arbitrary signed root */
    long long nval_pos_with(int first, int second, int a) const {
        Weight w = R.positive_roots[static_cast<std::size_t>(second)].omega -
                   R.positive_roots[static_cast<std::size_t>(a)].omega;
        auto idx = R.signed_root_index(w);
        if (!idx) return 0;
        return nval({first, +1}, {idx->first, idx->second});
    }
};

void validate(const NilpotentAlgebra& A) {
    const RootSystem& R = A.R;
    int m = static_cast<int>(R.num_positive_roots());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            long long nij = A.n_pos(i, j);
            if (nij != -A.n_pos(j, i)) throw std::logic_error("antisymmetry violated");
            if (A.sum_index(i, j) >= 0) {
                long long want = A.string_length(i, j) + 1;
                if (nij != want && nij != -want)
                    throw std::logic_error("magnitude rule violated");
            } else if (nij != 0) {
                throw std::logic_error("nonzero constant for a non-root sum");
            }
        }
    // Jacobi over Z on all triples of negative root vectors
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                // [x_{-u},[x_{-v},x_{-w}]], inner bracket first
                auto term = [&](int u, int v, int w) -> long long {
                    int s = A.sum_index(v, w);
                    if (s < 0) return 0;
                    if (A.sum_index(u, s) < 0) return 0;
                    return A.n_neg(v, w) * A.n_neg(u, s);
                };
                if (term(a, b, c) + term(b, c, a) + term(c, a, b) != 0)
                    throw std::logic_error("Jacobi identity violated");
            }
}

} // namespace

long long NilpotentAlgebra::n_pos(int i, int j) const {
    return npos_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::pair<int, long long> NilpotentAlgebra::ustar_action(int a, int b) const {
    // x_{-a}.phi_b = -N_{-a,-(b-a)} phi_{b-a} = N_{a,b-a} phi_{b-a}
    Weight w = R.positive_roots[static_cast<std::size_t>(b)].omega -
               R.positive_roots[static_cast<std::size_t>(a)].omega;
    auto idx = R.signed_root_index(w);
    if (!idx || idx->second < 0) return {-1, 0};
    return {idx->first, n_pos(a, idx->first)};
}

int NilpotentAlgebra::string_length(int i, int j) const {
    Weight w = R.positive_roots[static_cast<std::size_t>(j)].omega;
    const Weight& alpha = R.positive_roots[static_cast<std::size_t>(i)].omega;
    int k = 0;
    while (true) {
        w -= alpha;
        if (!R.signed_root_index(w)) break;
        ++k;
    }
    return k;
}

NilpotentAlgebra structure_constants(const RootSystem& R, bool alt_order) {
    Builder b(R, alt_order);
    b.build();

    NilpotentAlgebra A;
    A.R = R;
    A.sum_ = b.sum;
    A.npos_ = b.n;
    std::size_t m = R.num_positive_roots();
    A.d1_.assign(m, {});
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t bb = a + 1; bb < m; ++bb)
                if (A.sum_[a][bb] == static_cast<int>(g))
                    A.d1_[g].push_back({static_cast<int>(a), static_cast<int>(bb),
                                        A.n_pos(static_cast<int>(a), static_cast<int>(bb))});

    if (R.rank() <= 6) validate(A);
    return A;
}

} // namespace frobcoh
