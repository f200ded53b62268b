#include "frobcoh/root_sums.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace frobcoh {

namespace {

void canonicalize(RootSumSolution& s, const RootSystem& R) {
    if (s.sigma2 < s.sigma1) std::swap(s.sigma1, s.sigma2);
    if (s.kind == RootSumSolution::Kind::two_root && s.rhs.size() == 2) {
        // when both rhs roots are simple the roles are symmetric; order them
        auto simple = [&](const Weight& w) {
            auto idx = R.signed_root_index(w);
            return idx && idx->second > 0 && R.root(idx->first).height == 1;
        };
        if (simple(s.rhs[0].first) && simple(s.rhs[1].first) && s.rhs[1].first < s.rhs[0].first)
            std::swap(s.rhs[0], s.rhs[1]);
    }
    if (s.kind == RootSumSolution::Kind::triple)
        std::sort(s.rhs.begin(), s.rhs.end());
}

std::string weight_as_roots(const RootSystem& R, const Weight& w) {
    auto [num, den] = R.pi_coords(w);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (i) os << ",";
        if (num[i] % den == 0)
            os << num[i] / den;
        else
            os << num[i] << "/" << den;
    }
    os << "]";
    return os.str();
}

/* prime threshold above which the enumerator output is provably empty */
long long empty_threshold(const RootSystem& R, RootSumSolution::Kind kind) {
    char t = R.type_label; // canonical, so B2 = C2 arrives as 'B' with n = 2
    int n = R.rank_n;
    switch (kind) {
    case RootSumSolution::Kind::p_multiple:
        return 5;
    case RootSumSolution::Kind::two_root:
        switch (t) {
        case 'B': return n == 2 ? 5 : 7;
        case 'F': case 'G': return 7;
        default: return 5;
        }
    case RootSumSolution::Kind::triple:
        switch (t) {
        case 'A':
            if (n == 4) return 7;
            return 5; // A6 additionally excludes p = 7, handled by the caller
        case 'B': return n == 2 ? 5 : 7;
        case 'C': return 7;
        case 'F': case 'G': return 11;
        default: return 5;
        }
    case RootSumSolution::Kind::simple_rhs:
        return t == 'A' && n == 4 ? 7 : 5;
    }
    return 5;
}

} // namespace

bool RootSumSolution::validate(long long p) const {
    Weight lhs = alpha + sigma1 + sigma2;
    Weight rhs_total = p * nu;
    for (const auto& [w, c] : rhs) rhs_total += c * w;
    return lhs == rhs_total;
}

std::string RootSumSolution::str(const RootSystem& R) const {
    std::ostringstream os;
    os << kind_name(kind) << ": " << weight_as_roots(R, alpha);
    if (!sigma1.is_zero()) os << " + " << weight_as_roots(R, sigma1);
    if (!sigma2.is_zero()) os << " + " << weight_as_roots(R, sigma2);
    os << " =";
    for (const auto& [w, c] : rhs) {
        os << " ";
        if (c != 1) os << c << "*";
        os << weight_as_roots(R, w) << " +";
    }
    os << " p*" << weight_as_roots(R, nu);
    return os.str();
}

const char* kind_name(RootSumSolution::Kind k) {
    switch (k) {
    case RootSumSolution::Kind::p_multiple: return "p-multiple";
    case RootSumSolution::Kind::two_root: return "two-root-rhs";
    case RootSumSolution::Kind::triple: return "triple-rhs";
    case RootSumSolution::Kind::simple_rhs: return "simple-rhs";
    }
    return "?";
}

std::vector<RootSumSolution> check_p_multiple(const RootSystem& R, long long p) {
    std::vector<RootSumSolution> out;
    int m = static_cast<int>(R.num_positive_roots());
    for (int a = 0; a < R.rank_n; ++a)
        for (int s1 = 0; s1 < m; ++s1) {
            if (s1 == a) continue;
            for (int s2 = s1 + 1; s2 < m; ++s2) {
                if (s2 == a) continue;
                Weight gamma = R.root(a).omega + R.root(s1).omega + R.root(s2).omega;
                if (!gamma.divisible_by(p)) continue;
                RootSumSolution s;
                s.kind = RootSumSolution::Kind::p_multiple;
                s.alpha = R.root(a).omega;
                s.sigma1 = R.root(s1).omega;
                s.sigma2 = R.root(s2).omega;
                s.nu = gamma.divided(p);
                canonicalize(s, R);
                assert(s.validate(p));
                out.push_back(std::move(s));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootSumSolution> check_two_root_rhs(const RootSystem& R, long long p) {
    std::vector<RootSumSolution> out;
    int m = static_cast<int>(R.num_positive_roots());
    Weight zero(R.rank());
    // sigma candidates include 0, encoded as index -1
    for (int a = 0; a < R.rank_n; ++a)
        for (int s1 = -1; s1 < m; ++s1) {
            if (s1 == a) continue;
            for (int s2 = s1 >= 0 ? s1 + 1 : -1; s2 < m; ++s2) {
                if (s2 == a) continue;
                Weight gamma = R.root(a).omega;
                if (s1 >= 0) gamma += R.root(s1).omega;
                if (s2 >= 0) gamma += R.root(s2).omega;
                for (int b = 0; b < R.rank_n; ++b)
                    for (int s3 = 0; s3 < m; ++s3) {
                        if (s3 == b) continue;
                        // both simple: count the unordered pair once
                        if (s3 < R.rank_n && s3 < b) continue;
                        Weight diff = gamma - R.root(b).omega - R.root(s3).omega;
                        if (diff.is_zero()) continue;
                        if (!R.in_p_root_lattice(diff, p)) continue; // nu must lie in Z Phi
                        RootSumSolution s;
                        s.kind = RootSumSolution::Kind::two_root;
                        s.alpha = R.root(a).omega;
                        s.sigma1 = s1 >= 0 ? R.root(s1).omega : zero;
                        s.sigma2 = s2 >= 0 ? R.root(s2).omega : zero;
                        s.rhs = {{R.root(b).omega, 1}, {R.root(s3).omega, 1}};
                        s.nu = diff.divided(p);
                        canonicalize(s, R);
                        assert(s.validate(p));
                        out.push_back(std::move(s));
                    }
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RootSumSolution> check_triple_rhs(const RootSystem& R, long long p) {
    std::vector<RootSumSolution> out;
    int m = static_cast<int>(R.num_positive_roots());
    int n = R.rank_n;
    bool general = R.fundamental_group_order() % p == 0;

    auto emit = [&](int a, int s1, int s2, const std::vector<long long>& coeffs, const Weight& nu) {
        if (nu.is_zero()) return;
        RootSumSolution s;
        s.kind = RootSumSolution::Kind::triple;
        s.alpha = R.root(a).omega;
        s.sigma1 = R.root(s1).omega;
        s.sigma2 = R.root(s2).omega;
        for (int i = 0; i < n; ++i)
            if (coeffs[static_cast<std::size_t>(i)] != 0)
                s.rhs.push_back({R.simple_root(i), coeffs[static_cast<std::size_t>(i)]});
        s.nu = nu;
        canonicalize(s, R);
        assert(s.validate(p));
        out.push_back(std::move(s));
    };

    /* feasibility of a coefficient vector as i1 b1 + i2 b2 + i3 b3 */
    auto feasible = [&](const std::vector<long long>& c) {
        int nz = 0, ones = 0;
        for (long long x : c) {
            if (x < 0 || x >= p) return false;
            if (x != 0) ++nz;
            if (x == 1) ++ones;
        }
        if (nz > 3) return false;
        if (nz == 3 && ones == 0) return false;
        return true;
    };

    for (int a = 0; a < n; ++a)
        for (int s1 = 0; s1 < m; ++s1) {
            if (s1 == a) continue;
            for (int s2 = s1 + 1; s2 < m; ++s2) {
                if (s2 == a) continue;
                Weight gamma = R.root(a).omega + R.root(s1).omega + R.root(s2).omega;
                auto [num, den] = R.pi_coords(gamma);
                std::vector<long long> mcoef(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    assert(num[static_cast<std::size_t>(i)] % den == 0);
                    mcoef[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(i)] / den;
                }
                if (!general) {
                    // nu lies in the root lattice, so sigma == gamma mod p
                    std::vector<long long> sig(static_cast<std::size_t>(n));
                    std::vector<int> nupi(n);
                    bool nz = false;
                    for (int i = 0; i < n; ++i) {
                        sig[static_cast<std::size_t>(i)] = mcoef[static_cast<std::size_t>(i)] % p;
                        nupi[static_cast<std::size_t>(i)] = static_cast<int>(
                            (mcoef[static_cast<std::size_t>(i)] - sig[static_cast<std::size_t>(i)]) / p);
                        if (nupi[static_cast<std::size_t>(i)]) nz = true;
                    }
                    if (nz && feasible(sig)) emit(a, s1, s2, sig, R.omega_of_pi(nupi));
                    continue;
                }
                // general nu in X(T): enumerate sparse coefficient vectors
                std::vector<long long> sig(static_cast<std::size_t>(n), 0);
                auto try_sig = [&]() {
                    Weight swt(R.rank());
                    for (int i = 0; i < n; ++i)
                        if (sig[static_cast<std::size_t>(i)])
                            swt += sig[static_cast<std::size_t>(i)] * R.simple_root(i);
                    Weight diff = gamma - swt;
                    if (!diff.divisible_by(p)) return;
                    emit(a, s1, s2, sig, diff.divided(p));
                };
                for (int j = 0; j < n; ++j)
                    for (long long c1 = 1; c1 < p; ++c1) {
                        sig.assign(static_cast<std::size_t>(n), 0);
                        sig[static_cast<std::size_t>(j)] = c1;
                        try_sig();
                    }
                for (int j = 0; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        for (long long c1 = 1; c1 < p; ++c1)
                            for (long long c2 = 1; c2 < p; ++c2) {
                                sig.assign(static_cast<std::size_t>(n), 0);
                                sig[static_cast<std::size_t>(j)] = c1;
                                sig[static_cast<std::size_t>(k)] = c2;
                                try_sig();
                            }
                for (int j = 0; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        for (int l = k + 1; l < n; ++l)
                            for (long long c1 = 1; c1 < p; ++c1)
                                for (long long c2 = 1; c2 < p; ++c2)
                                    for (long long c3 = 1; c3 < p; ++c3) {
                                        if (c1 != 1 && c2 != 1 && c3 != 1) continue;
                                        sig.assign(static_cast<std::size_t>(n), 0);
                                        sig[static_cast<std::size_t>(j)] = c1;
                                        sig[static_cast<std::size_t>(k)] = c2;
                                        sig[static_cast<std::size_t>(l)] = c3;
                                        try_sig();
                                    }
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RootSumSolution> check_simple_rhs(const RootSystem& R, long long p) {
    std::vector<RootSumSolution> out;
    int m = static_cast<int>(R.num_positive_roots());
    for (int a = 0; a < R.rank_n; ++a)
        for (int s1 = 0; s1 < m; ++s1) {
            if (s1 == a) continue;
            for (int s2 = s1 + 1; s2 < m; ++s2) {
                if (s2 == a) continue;
                Weight gamma = R.root(a).omega + R.root(s1).omega + R.root(s2).omega;
                for (int b = 0; b < R.rank_n; ++b) {
                    Weight diff = gamma - R.root(b).omega;
                    assert(!diff.is_zero()); // heights differ
                    if (!diff.divisible_by(p)) continue;
                    RootSumSolution s;
                    s.kind = RootSumSolution::Kind::simple_rhs;
                    s.alpha = R.root(a).omega;
                    s.sigma1 = R.root(s1).omega;
                    s.sigma2 = R.root(s2).omega;
                    s.rhs = {{R.root(b).omega, 1}};
                    s.nu = diff.divided(p);
                    canonicalize(s, R);
                    assert(s.validate(p));
                    out.push_back(std::move(s));
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Weight pi_weight(const RootSystem& R, std::vector<int> pi) {
    pi.resize(R.rank(), 0);
    return R.omega_of_pi(pi);
}

/* the published complete lists of exceptional solutions at p = 5 (two-root
   form) and at the primes just below the triple-form thresholds */
std::vector<RootSumSolution> two_root_exceptions(const RootSystem& R) {
    std::vector<RootSumSolution> out;
    char t = R.type_label;
    int n = R.rank_n;
    auto mk = [&](Weight a, Weight s1, Weight s2, Weight b, Weight s3, Weight nu) {
        RootSumSolution s;
        s.kind = RootSumSolution::Kind::two_root;
        s.alpha = std::move(a);
        s.sigma1 = std::move(s1);
        s.sigma2 = std::move(s2);
        s.rhs = {{std::move(b), 1}, {std::move(s3), 1}};
        s.nu = std::move(nu);
        canonicalize(s, R);
        out.push_back(std::move(s));
    };
    if (t == 'B' && n >= 3) {
        for (int i = 1; i <= n - 2; ++i) {
            std::vector<int> s2(static_cast<std::size_t>(n), 0), s3(static_cast<std::size_t>(n), 0);
            for (int j = i; j <= n - 1; ++j) {
                s2[static_cast<std::size_t>(j - 1)] = 1;
                s3[static_cast<std::size_t>(j - 1)] = 1;
            }
            s2[static_cast<std::size_t>(n - 1)] = 2;
            std::vector<int> s1(static_cast<std::size_t>(n), 0);
            s1[static_cast<std::size_t>(n - 2)] = 1;
            s1[static_cast<std::size_t>(n - 1)] = 2;
            mk(R.simple_root(n - 1), pi_weight(R, s1), pi_weight(R, s2), R.simple_root(n - 2),
               pi_weight(R, s3), R.simple_root(n - 1));
        }
    } else if (t == 'F') {
        mk(R.simple_root(2), pi_weight(R, {0, 1, 2, 0}), pi_weight(R, {1, 1, 2, 0}),
           R.simple_root(1), pi_weight(R, {1, 1, 0, 0}), R.simple_root(2));
        mk(R.simple_root(2), pi_weight(R, {0, 1, 2, 0}), pi_weight(R, {1, 2, 4, 2}),
           R.simple_root(1), pi_weight(R, {1, 2, 2, 2}), R.simple_root(2));
    } else if (t == 'G') {
        mk(R.simple_root(0), pi_weight(R, {2, 1}), pi_weight(R, {3, 1}), R.simple_root(1),
           pi_weight(R, {1, 1}), R.simple_root(0));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootSumSolution> triple_exceptions(const RootSystem& R, long long p) {
    std::vector<RootSumSolution> out;
    char t = R.type_label;
    int n = R.rank_n;
    auto mk = [&](Weight a, Weight s1, Weight s2, std::vector<std::pair<Weight, long long>> rhs,
                  Weight nu) {
        RootSumSolution s;
        s.kind = RootSumSolution::Kind::triple;
        s.alpha = std::move(a);
        s.sigma1 = std::move(s1);
        s.sigma2 = std::move(s2);
        s.rhs = std::move(rhs);
        s.nu = std::move(nu);
        canonicalize(s, R);
        assert(s.validate(p));
        out.push_back(std::move(s));
    };
    if (t == 'C' && n >= 3 && p == 5) {
        // first family, unordered pairs from the stated parameter ranges
        std::set<std::pair<Weight, Weight>> seen;
        for (int c1 = 0; c1 <= 2; ++c1)
            for (int c2 = 0; c2 <= (n >= 4 ? 1 : 0); ++c2)
                for (int c3 = 1; c3 <= 2; ++c3) {
                    std::vector<int> v1(static_cast<std::size_t>(n), 0),
                        v2(static_cast<std::size_t>(n), 0);
                    v1[static_cast<std::size_t>(n - 3)] = c1;
                    v1[static_cast<std::size_t>(n - 2)] = 2;
                    v1[static_cast<std::size_t>(n - 1)] = 1;
                    if (n >= 4) v2[static_cast<std::size_t>(n - 4)] = c2;
                    v2[static_cast<std::size_t>(n - 3)] = c3;
                    v2[static_cast<std::size_t>(n - 2)] = 2;
                    v2[static_cast<std::size_t>(n - 1)] = 1;
                    Weight w1 = pi_weight(R, v1), w2 = pi_weight(R, v2);
                    if (w1 == w2) continue;
                    Weight lo = std::min(w1, w2), hi = std::max(w1, w2);
                    if (!seen.insert({lo, hi}).second) continue;
                    std::vector<std::pair<Weight, long long>> rhs;
                    if (n >= 4 && c2) rhs.push_back({R.simple_root(n - 4), c2});
                    rhs.push_back({R.simple_root(n - 3), c1 + c3});
                    rhs.push_back({R.simple_root(n - 1), 2});
                    mk(R.simple_root(n - 2), lo, hi, std::move(rhs), R.simple_root(n - 2));
                }
        if (n >= 4) {
            std::vector<int> v1(static_cast<std::size_t>(n), 0), v2(static_cast<std::size_t>(n), 0);
            v1[static_cast<std::size_t>(n - 3)] = 2;
            v1[static_cast<std::size_t>(n - 2)] = 2;
            v1[static_cast<std::size_t>(n - 1)] = 1;
            v2 = v1;
            v2[static_cast<std::size_t>(n - 4)] = 1;
            mk(R.simple_root(n - 3), pi_weight(R, v1), pi_weight(R, v2),
               {{R.simple_root(n - 4), 1}, {R.simple_root(n - 2), 4}, {R.simple_root(n - 1), 2}},
               R.simple_root(n - 3));
        }
    } else if (t == 'F' && p == 7) {
        for (int c = 0; c <= 2; ++c) {
            mk(R.simple_root(2), pi_weight(R, {0, 1, 2, c}), pi_weight(R, {1, 2, 4, 2}),
               {{R.simple_root(0), 1}, {R.simple_root(1), 3}, {R.simple_root(3), c + 2}},
               R.simple_root(2));
            mk(R.simple_root(2), pi_weight(R, {0, 1, 2, c}), pi_weight(R, {1, 3, 4, 2}),
               {{R.simple_root(0), 1}, {R.simple_root(1), 4}, {R.simple_root(3), c + 2}},
               R.simple_root(2));
        }
        mk(R.simple_root(1), pi_weight(R, {1, 3, 4, 2}), pi_weight(R, {2, 3, 4, 2}),
           {{R.simple_root(0), 3}, {R.simple_root(2), 1}, {R.simple_root(3), 4}},
           pi_weight(R, {0, 1, 1, 0}));
    } else if (t == 'G' && p == 7) {
        mk(R.simple_root(0), pi_weight(R, {3, 1}), pi_weight(R, {3, 2}), {{R.simple_root(1), 3}},
           R.simple_root(0));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootSumSolution> simple_rhs_exceptions(const RootSystem& R, long long p) {
    std::vector<RootSumSolution> out;
    if (R.type_label == 'A' && R.rank_n == 4 && p == 5) {
        auto mk = [&](Weight a, Weight s1, Weight s2, Weight b, Weight nu) {
            RootSumSolution s;
            s.kind = RootSumSolution::Kind::simple_rhs;
            s.alpha = std::move(a);
            s.sigma1 = std::move(s1);
            s.sigma2 = std::move(s2);
            s.rhs = {{std::move(b), 1}};
            s.nu = std::move(nu);
            canonicalize(s, R);
            assert(s.validate(p));
            out.push_back(std::move(s));
        };
        mk(R.simple_root(2), pi_weight(R, {0, 1, 1, 0}), pi_weight(R, {1, 1, 1, 0}),
           R.simple_root(3), fundamental_weight(4, 2) - fundamental_weight(4, 3));
        mk(R.simple_root(1), pi_weight(R, {0, 1, 1, 0}), pi_weight(R, {0, 1, 1, 1}),
           R.simple_root(0), fundamental_weight(4, 1) - fundamental_weight(4, 0));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<std::vector<RootSumSolution>> expected_catalog(const RootSystem& R, long long p,
                                                             RootSumSolution::Kind kind) {
    char t = R.type_label;
    int n = R.rank_n;
    long long threshold = empty_threshold(R, kind);
    bool a6_triple_gap = kind == RootSumSolution::Kind::triple && t == 'A' && n == 6 && p == 7;
    if (p >= threshold && !a6_triple_gap) return std::vector<RootSumSolution>{};
    switch (kind) {
    case RootSumSolution::Kind::p_multiple:
        return std::nullopt; // nonempty below p = 5, no complete list stated
    case RootSumSolution::Kind::two_root:
        if (p == 5) return two_root_exceptions(R);
        return std::nullopt;
    case RootSumSolution::Kind::triple:
        if (t == 'C' && p == 5) return triple_exceptions(R, p);
        if ((t == 'F' || t == 'G') && p == 7) return triple_exceptions(R, p);
        return std::nullopt;
    case RootSumSolution::Kind::simple_rhs:
        if (t == 'A' && n == 4 && p == 5) return simple_rhs_exceptions(R, p);
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace frobcoh
