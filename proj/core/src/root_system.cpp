/* Construction of irreducible root systems, Bourbaki numbering. */

#include "frobcoh/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace frobcoh {

namespace {

struct Bond {
    int i, j;     // 0-based node indices
    int aij, aji; // cartan[i][j], cartan[j][i]
};

/* Dynkin diagram data: bonds and symmetrizers d_i. */
void diagram_data(char t, int n, std::vector<Bond>& bonds, std::vector<int>& d) {
    bonds.clear();
    d.assign(static_cast<std::size_t>(n), 1);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) bonds.push_back({i, i + 1, -1, -1});
    };
    switch (t) {
    case 'A':
        chain(n);
        break;
    case 'B': // alpha_n short
        chain(n - 1);
        bonds.push_back({n - 2, n - 1, -1, -2});
        for (int i = 0; i < n - 1; ++i) d[static_cast<std::size_t>(i)] = 2;
        break;
    case 'C': // alpha_n long
        chain(n - 1);
        bonds.push_back({n - 2, n - 1, -2, -1});
        d[static_cast<std::size_t>(n - 1)] = 2;
        break;
    case 'D':
        chain(n - 1);
        bonds.push_back({n - 3, n - 1, -1, -1});
        break;
    case 'E':
        // nodes 1-3-4-5-6(-7(-8)) in a row, node 2 attached to node 4
        bonds.push_back({0, 2, -1, -1});
        for (int i = 2; i + 1 < n; ++i) bonds.push_back({i, i + 1, -1, -1});
        bonds.push_back({1, 3, -1, -1});
        break;
    case 'F': // alpha_1,alpha_2 long; alpha_3,alpha_4 short
        bonds.push_back({0, 1, -1, -1});
        bonds.push_back({1, 2, -1, -2});
        bonds.push_back({2, 3, -1, -1});
        d[0] = d[1] = 2;
        break;
    case 'G': // alpha_1 short, alpha_2 long
        bonds.push_back({0, 1, -3, -1});
        d[1] = 3;
        break;
    default:
        break;
    }
}

bool valid_type(char t, int n) {
    switch (t) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

/* Exact inverse of an integer matrix as (adjugate, det), by fraction-free
   elimination on the small Cartan matrices that show up here. */
void exact_inverse(const std::vector<std::vector<long long>>& m,
                   std::vector<std::vector<long long>>& adj, long long& det) {
    const std::size_t n = m.size();
    // rational elimination with a running common denominator
    std::vector<std::vector<long long>> a(m);
    std::vector<std::vector<long long>> inv(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    long long den = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        assert(piv < n && "Cartan matrix is invertible");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        long long pv = a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            long long f = a[r][col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] = a[r][c] * pv - a[col][c] * f;
                inv[r][c] = inv[r][c] * pv - inv[col][c] * f;
            }
        }
        // keep entries small: divide row r != col by gcd
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            long long g = 0;
            for (std::size_t c = 0; c < n; ++c) g = std::gcd(g, std::gcd(a[r][c], inv[r][c]));
            if (g > 1)
                for (std::size_t c = 0; c < n; ++c) { a[r][c] /= g; inv[r][c] /= g; }
        }
    }
    // now a is diagonal; scale to a common denominator
    den = 1;
    for (std::size_t i = 0; i < n; ++i) den = std::lcm(den, std::abs(a[i][i]));
    adj.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        long long f = den / a[i][i];
        for (std::size_t j = 0; j < n; ++j) adj[i][j] = inv[i][j] * f;
    }
    det = den;
}

} // namespace

long long RootSystem::pairing(const Weight& lambda, int idx) const {
    const Root& r = positive_roots[static_cast<std::size_t>(idx)];
    long long num = 0;
    int db = r.is_short ? 1 : 0;
    (void)db;
    long long norm2_half = 0;
    for (int i = 0; i < rank_n; ++i) {
        num += static_cast<long long>(r.pi[static_cast<std::size_t>(i)]) *
               d[static_cast<std::size_t>(i)] * lambda[static_cast<std::size_t>(i)];
        norm2_half += static_cast<long long>(r.pi[static_cast<std::size_t>(i)]) *
                      d[static_cast<std::size_t>(i)] * r.omega[static_cast<std::size_t>(i)];
    }
    norm2_half /= 2; // d_beta = (beta,beta)/2
    assert(num % norm2_half == 0);
    return num / norm2_half;
}

std::optional<int> RootSystem::root_index_pi(const std::vector<int>& pi) const {
    Weight w = omega_of_pi(pi);
    auto r = signed_root_index(w);
    if (r && r->second > 0) return r->first;
    return std::nullopt;
}

std::optional<std::pair<int, int>> RootSystem::signed_root_index(const Weight& w) const {
    auto it = omega_index_.find(w.coords());
    if (it != omega_index_.end()) return std::make_pair(it->second, 1);
    it = omega_index_.find((-w).coords());
    if (it != omega_index_.end()) return std::make_pair(it->second, -1);
    return std::nullopt;
}

std::pair<std::vector<long long>, long long> RootSystem::pi_coords(const Weight& lambda) const {
    // solve Cartan * x = lambda coordinates; x = adj*lambda / det
    std::vector<long long> num(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += adj_cartan_[i][j] * lambda[j];
        num[i] = s;
    }
    return {num, cartan_det_};
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
    auto [num, den] = pi_coords(lambda);
    for (long long x : num)
        if (x % den != 0) return false;
    return true;
}

bool RootSystem::in_p_root_lattice(const Weight& lambda, long long p) const {
    auto [num, den] = pi_coords(lambda);
    for (long long x : num)
        if (x % (den * p) != 0) return false;
    return true;
}

Weight RootSystem::omega_of_pi(const std::vector<int>& pi) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < rank(); ++j) s += cartan[i][j] * pi[j];
        w[i] = s;
    }
    return w;
}

Weight RootSystem::to_internal(const Weight& w) const {
    Weight r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        r[static_cast<std::size_t>(user_index_map[i])] = w[i];
    return r;
}

Weight RootSystem::to_user(const Weight& w) const {
    Weight r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        r[i] = w[static_cast<std::size_t>(user_index_map[i])];
    return r;
}

std::vector<int> RootSystem::exponents() const {
    const int n = rank_n;
    std::vector<int> e;
    switch (type_label) {
    case 'A':
        for (int i = 1; i <= n; ++i) e.push_back(i);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
        break;
    case 'D':
        for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
        e.push_back(n - 1);
        std::sort(e.begin(), e.end());
        break;
    case 'E':
        if (n == 6) e = {1, 4, 5, 7, 8, 11};
        else if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
        else e = {1, 7, 11, 13, 17, 19, 23, 29};
        break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'G': e = {1, 5}; break;
    }
    return e;
}

RootSystem build_root_system(char type_label, int rank) {
    char internal = type_label;
    std::vector<int> perm(static_cast<std::size_t>(std::max(rank, 0)));
    std::iota(perm.begin(), perm.end(), 0);
    if (type_label == 'C' && rank == 2) { // B_2 = C_2, canonicalize with labels swapped
        internal = 'B';
        perm = {1, 0};
    }
    if (!valid_type(internal, rank))
        throw InvalidTypeError(std::string("invalid root system type ") + type_label +
                               std::to_string(rank));

    RootSystem R;
    R.type_label = internal;
    R.user_label = type_label;
    R.rank_n = rank;
    R.user_index_map = perm;

    std::vector<Bond> bonds;
    diagram_data(internal, rank, bonds, R.d);
    R.cartan.assign(static_cast<std::size_t>(rank), std::vector<long long>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) R.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (const Bond& b : bonds) {
        R.cartan[static_cast<std::size_t>(b.i)][static_cast<std::size_t>(b.j)] = b.aij;
        R.cartan[static_cast<std::size_t>(b.j)][static_cast<std::size_t>(b.i)] = b.aji;
    }
    exact_inverse(R.cartan, R.adj_cartan_, R.cartan_det_);

    // close the simple roots under the reflections s_i, keeping positives
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> pi(static_cast<std::size_t>(rank), 0);
        pi[static_cast<std::size_t>(i)] = 1;
        seen.insert(pi);
        queue.push_back(pi);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        std::vector<int> beta = queue[q];
        for (int i = 0; i < rank; ++i) {
            long long pair = 0;
            for (int j = 0; j < rank; ++j)
                pair += R.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        beta[static_cast<std::size_t>(j)];
            std::vector<int> img = beta;
            img[static_cast<std::size_t>(i)] -= static_cast<int>(pair);
            bool neg = false;
            for (int x : img)
                if (x < 0) neg = true;
            if (!neg && seen.insert(img).second) queue.push_back(img);
        }
    }

    std::vector<Root> roots;
    int min_d = 3, max_d = 1;
    for (const auto& pi : seen) {
        Root r;
        r.pi = pi;
        r.height = std::accumulate(pi.begin(), pi.end(), 0);
        r.omega = R.omega_of_pi(pi);
        long long norm2 = 0;
        for (std::size_t i = 0; i < R.rank(); ++i)
            norm2 += static_cast<long long>(pi[i]) * R.d[i] * r.omega[i];
        assert(norm2 % 2 == 0);
        int db = static_cast<int>(norm2 / 2);
        min_d = std::min(min_d, db);
        max_d = std::max(max_d, db);
        r.is_short = db == 1 || db == 2; // fixed up below
        r.is_long = false;
        roots.push_back(std::move(r));
    }
    // short = minimal norm; in simply-laced systems every root is both
    for (auto& r : roots) {
        long long norm2 = 0;
        for (std::size_t i = 0; i < R.rank(); ++i)
            norm2 += static_cast<long long>(r.pi[i]) * R.d[i] * r.omega[i];
        int db = static_cast<int>(norm2 / 2);
        r.is_short = db == min_d;
        r.is_long = db == max_d;
    }
    // height, then lex with alpha_1 weighted heaviest, so the simple roots
    // come out as alpha_1 .. alpha_n
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return b.pi < a.pi;
    });
    R.positive_roots = std::move(roots);
    for (std::size_t k = 0; k < R.positive_roots.size(); ++k)
        R.omega_index_[R.positive_roots[k].omega.coords()] = static_cast<int>(k);

    R.rho = Weight(R.rank());
    for (std::size_t i = 0; i < R.rank(); ++i) R.rho[i] = 1;
    {
        Weight two_rho(R.rank());
        for (const Root& r : R.positive_roots) two_rho += r.omega;
        assert(two_rho == 2 * R.rho && "rho must be the half sum of positive roots");
    }

    for (std::size_t k = 0; k < R.positive_roots.size(); ++k) {
        const Root& r = R.positive_roots[k];
        if (r.is_short &&
            (R.max_short_root < 0 ||
             r.height > R.positive_roots[static_cast<std::size_t>(R.max_short_root)].height))
            R.max_short_root = static_cast<int>(k);
        if (R.highest_root < 0 ||
            r.height > R.positive_roots[static_cast<std::size_t>(R.highest_root)].height)
            R.highest_root = static_cast<int>(k);
    }
    R.coxeter_number = static_cast<int>(R.pairing(R.rho, R.max_short_root)) + 1;
    return R;
}

RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2) throw InvalidTypeError("bad type label: " + label);
    char t = label[0];
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (...) {
        throw InvalidTypeError("bad type label: " + label);
    }
    return build_root_system(t, n);
}

std::pair<Weight, Weight> restricted_decompose(const Weight& lambda, long long p) {
    Weight l0(lambda.rank()), l1(lambda.rank());
    for (std::size_t i = 0; i < lambda.rank(); ++i) {
        long long c = lambda[i];
        long long r = ((c % p) + p) % p;
        l0[i] = r;
        l1[i] = (c - r) / p;
    }
    return {l0, l1};
}

} // namespace frobcoh
