#include "frobcoh/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace frobcoh {

namespace {

std::vector<std::vector<long long>> identity_matrix(std::size_t n) {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& a,
                                            const std::vector<std::vector<long long>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long long x = a[i][k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += x * b[k][j];
        }
    return c;
}

} // namespace

Weight WeylElement::apply(const Weight& w) const {
    std::size_t n = w.rank();
    Weight r(n);
    for (std::size_t i = 0; i < n; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += matrix[i][j] * w[j];
        r[i] = s;
    }
    return r;
}

Weight WeylElement::dot(const RootSystem& R, const Weight& lambda) const {
    return apply(lambda + R.rho) - R.rho;
}

WeylElement weyl_identity(const RootSystem& R) {
    WeylElement e;
    e.matrix = identity_matrix(R.rank());
    return e;
}

WeylElement simple_reflection(const RootSystem& R, int i) {
    // (s_i lambda)_k = lambda_k - lambda_i * <alpha_i, alpha_k^vee>
    WeylElement s;
    s.word = {i};
    s.matrix = identity_matrix(R.rank());
    for (std::size_t k = 0; k < R.rank(); ++k)
        s.matrix[k][static_cast<std::size_t>(i)] -= R.cartan[k][static_cast<std::size_t>(i)];
    return s;
}

WeylElement weyl_word(const RootSystem& R, const std::vector<int>& word) {
    WeylElement w = weyl_identity(R);
    for (int i : word) {
        w.matrix = mat_mul(w.matrix, simple_reflection(R, i).matrix);
        w.word.push_back(i);
    }
    return w;
}

int inversion_count(const RootSystem& R, const WeylElement& w) {
    int cnt = 0;
    for (const Root& r : R.positive_roots) {
        auto img = R.signed_root_index(w.apply(r.omega));
        assert(img && "Weyl images of roots are roots");
        if (img->second < 0) ++cnt;
    }
    return cnt;
}

std::vector<WeylElement> elements_of_length(const RootSystem& R, int n) {
    std::vector<WeylElement> level = {weyl_identity(R)};
    for (int len = 0; len < n; ++len) {
        std::map<std::vector<std::vector<long long>>, WeylElement> next;
        for (const WeylElement& w : level) {
            for (int i = 0; i < R.rank_n; ++i) {
                // l(w s_i) = l(w)+1 iff w(alpha_i) > 0
                auto img = R.signed_root_index(w.apply(R.simple_root(i)));
                assert(img);
                if (img->second < 0) continue;
                WeylElement ws;
                ws.word = w.word;
                ws.word.push_back(i);
                ws.matrix = mat_mul(w.matrix, simple_reflection(R, i).matrix);
                next.emplace(ws.matrix, std::move(ws));
            }
        }
        level.clear();
        for (auto& [m, w] : next) level.push_back(std::move(w));
        if (level.empty()) break;
    }
    // canonical: order by word (BFS map order is by matrix; make it stable)
    std::sort(level.begin(), level.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
    return level;
}

Weight minus_dot_zero_telescoped(const RootSystem& R, const std::vector<int>& word) {
    Weight sum(R.rank());
    for (std::size_t m = 0; m < word.size(); ++m) {
        // s_1...s_{m-1}(beta_m), the prefix before position m applied to beta_m
        Weight v = R.simple_root(word[m]);
        for (std::size_t k = m; k-- > 0;) {
            WeylElement s = simple_reflection(R, word[k]);
            v = s.apply(v);
        }
        sum += v;
    }
    return sum;
}

long long poincare_coefficient(const RootSystem& R, int n) {
    std::vector<long long> poly = {1};
    for (int e : R.exponents()) {
        std::vector<long long> next(std::min<std::size_t>(poly.size() + static_cast<std::size_t>(e),
                                                          static_cast<std::size_t>(n) + 1),
                                    0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int k = 0; k <= e; ++k)
                if (i + static_cast<std::size_t>(k) < next.size())
                    next[i + static_cast<std::size_t>(k)] += poly[i];
        poly = std::move(next);
    }
    return static_cast<std::size_t>(n) < poly.size() ? poly[static_cast<std::size_t>(n)] : 0;
}

} // namespace frobcoh
