#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/prime_gates.hpp"
#include "frobcoh/root_system.hpp"
#include "frobcoh/tchar.hpp"
#include "frobcoh/weyl.hpp"

namespace frobcoh {

/* Classification value for a cohomology group of B_r with one-dimensional
   coefficients, as a B/B_r-module. */
struct CohClass {
    enum class Tag { Zero, Line, UStarTensor };
    Tag tag = Tag::Zero;
    Weight nu;        // untwisted weight
    int twist = 1;    // r in the Frobenius twist
    int mult = 1;     // Line only: 1 or 2
    std::string case_label;

    long long dim(const RootSystem& R) const;
    /* dimension of the zero-weight part (what survives to B-cohomology) */
    long long zero_weight_dim(const RootSystem& R) const;
    /* the weights p^r(...) with multiplicities */
    TChar weights(const RootSystem& R, long long p) const;

    bool same_output(const CohClass& o) const {
        if (tag != o.tag) return false;
        if (tag == Tag::Zero) return true;
        return nu == o.nu && twist == o.twist && mult == o.mult;
    }
    std::string str() const;

    static CohClass zero() { return {}; }
    static CohClass line(Weight nu, int r, int mult, std::string label);
    static CohClass ustar(Weight nu, int r, std::string label);
};

/* the unique nu with mu + p nu p-restricted, coordinatewise ceil(-c/p) */
Weight gamma_restricting(const Weight& mu, long long p);

struct GammaW {
    WeylElement w;
    long long p;
    Weight gamma;
};

/* gamma_w for a length-3 element; LengthError otherwise */
GammaW gamma_w(const RootSystem& R, const WeylElement& w, long long p);

struct GammaReport {
    std::vector<int> word;
    std::string case_id; // "I".."VI" plus exception markers
    Weight computed;
    Weight table;
    bool match;
};

/* classification of a length-3 element into the appendix case analysis,
   and the tabulated value of gamma_w for it */
std::pair<std::string, Weight> gamma_w_table_value(const RootSystem& R, const WeylElement& w,
                                                   long long p);

std::vector<GammaReport> gamma_w_table_check(const RootSystem& R, long long p);

/* H^n(B_1, lambda0) for n = 0,1,2 and lambda0 restricted */
CohClass low_degree_B1(const RootSystem& R, const Weight& lambda0, int n, long long p,
                       bool force = false);

/* H^n(B_r, lambda) for n = 0,1,2, any lambda, r >= 1 */
CohClass low_degree_Br(const RootSystem& R, const Weight& lambda, int n, int r, long long p,
                       bool force = false);

/* H^3(B_1, lambda0), lambda0 restricted */
CohClass classify_H3_B1(const RootSystem& R, const Weight& lambda0, long long p,
                        bool force = false);

/* H^3(B_r, lambda), r >= 1, any lambda; matches the closed case list and
   raises InternalInconsistency if two families disagree */
CohClass classify_H3_Br(const RootSystem& R, const Weight& lambda, int r, long long p,
                        bool force = false);

/* all firing case families (for --force exploration) */
std::vector<CohClass> classify_H3_Br_candidates(const RootSystem& R, const Weight& lambda, int r,
                                                long long p);

struct BClassification {
    long long dim = 0;
    std::string case_label = "zero";
};

BClassification classify_H3_B(const RootSystem& R, const Weight& lambda, long long p,
                              bool force = false);
std::vector<BClassification> classify_H3_B_candidates(const RootSystem& R, const Weight& lambda,
                                                      long long p);

} // namespace frobcoh
