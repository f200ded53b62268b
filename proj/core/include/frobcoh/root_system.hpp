#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobcoh/errors.hpp"
#include "frobcoh/weight.hpp"

namespace frobcoh {

/* One positive root, carried in both coordinate systems.
   pi: coordinates in the simple roots (non-negative integers);
   omega: coordinates in the fundamental weights. */
struct Root {
    std::vector<int> pi;
    Weight omega;
    int height = 0;
    bool is_short = false;
    bool is_long = false;
};

/* Irreducible root system with Bourbaki numbering.

   Conventions: <alpha,alpha> = 2 for short roots; in type B_n the simple
   root alpha_n is the unique short one, in type C_n it is the unique long
   one.  Positive roots are ordered by (height, lex on simple-root
   coordinates) and that ordering is used for every matrix built
   downstream.  B_2 and C_2 are the same system; both labels are accepted
   and canonicalized to the B_2 presentation, with the relabeling kept for
   reporting. */
class RootSystem {
  public:
    char type_label;        // label used internally ('A'..'G')
    char user_label;        // label the caller asked for (differs only for C_2)
    int rank_n;
    // user_index_map[i] = internal index of the user's alpha_{i+1}
    std::vector<int> user_index_map;

    // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<long long>> cartan;
    // d[i] = <alpha_i,alpha_i>/2 in {1,2,3}
    std::vector<int> d;

    std::vector<Root> positive_roots; // canonical order
    Weight rho;
    int coxeter_number = 0;
    int max_short_root = -1;          // index into positive_roots
    int highest_root = -1;

    std::size_t rank() const { return static_cast<std::size_t>(rank_n); }
    std::size_t num_positive_roots() const { return positive_roots.size(); }

    const Root& root(int idx) const { return positive_roots[static_cast<std::size_t>(idx)]; }
    Weight simple_root(int i) const { return positive_roots[static_cast<std::size_t>(i)].omega; }

    bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }

    /* <lambda, beta^vee> for the positive root with index idx. */
    long long pairing(const Weight& lambda, int idx) const;

    /* index of the positive root with the given simple-root coordinates  */
    std::optional<int> root_index_pi(const std::vector<int>& pi) const;

    /* Looks up +-beta by omega-coordinates; returns (index, sign). */
    std::optional<std::pair<int, int>> signed_root_index(const Weight& w) const;

    bool is_positive_root(const Weight& w) const {
        auto r = signed_root_index(w);
        return r && r->second > 0;
    }

    /* Exact simple-root coordinates of lambda: returns numerators with the
       common denominator det(Cartan). */
    std::pair<std::vector<long long>, long long> pi_coords(const Weight& lambda) const;

    bool in_root_lattice(const Weight& lambda) const;

    /* lambda in p Z Phi (p times the root lattice) */
    bool in_p_root_lattice(const Weight& lambda, long long p) const;

    Weight omega_of_pi(const std::vector<int>& pi) const;

    /* order of X(T)/Z Phi */
    long long fundamental_group_order() const { return cartan_det_; }

    /* Translate weights between the user's labeling and the internal one
       (identity except for C_2 -> B_2). */
    Weight to_internal(const Weight& w) const;
    Weight to_user(const Weight& w) const;

    /* Exponents e_1..e_n of the Weyl group (Poincare polynomial data). */
    std::vector<int> exponents() const;

  private:
    friend RootSystem build_root_system(char, int);
    // adj_cartan/cartan_det give the exact inverse: Cartan^{-1} = adj/det
    std::vector<std::vector<long long>> adj_cartan_;
    long long cartan_det_ = 1;
    std::map<std::vector<long long>, int> omega_index_;
};

RootSystem build_root_system(char type_label, int rank);
RootSystem build_root_system(const std::string& label); // e.g. "B4"

/* lambda = lambda0 + p*lambda1 with lambda0 p-restricted; unique. */
std::pair<Weight, Weight> restricted_decompose(const Weight& lambda, long long p);

} // namespace frobcoh
