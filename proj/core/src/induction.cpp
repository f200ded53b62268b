#include "frobcoh/induction.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "frobcoh/errors.hpp"

namespace frobcoh {

namespace {

using boost::multiprecision::cpp_int;

cpp_int weyl_dim_big(const RootSystem& R, const Weight& nu) {
    if (!nu.is_dominant()) throw NotDominantError("weyl_dim needs a dominant weight " + nu.str());
    cpp_int num = 1, den = 1;
    Weight shifted = nu + R.rho;
    for (std::size_t k = 0; k < R.num_positive_roots(); ++k) {
        num *= R.pairing(shifted, static_cast<int>(k));
        den *= R.pairing(R.rho, static_cast<int>(k));
    }
    cpp_int q = num / den;
    // the product is exactly divisible
    if (q * den != num) throw std::logic_error("Weyl dimension not integral");
    return q;
}

} // namespace

std::string weyl_dim_str(const RootSystem& R, const Weight& nu) {
    return weyl_dim_big(R, nu).str();
}

long long weyl_dim(const RootSystem& R, const Weight& nu) {
    cpp_int d = weyl_dim_big(R, nu);
    if (d > cpp_int(std::numeric_limits<long long>::max()))
        throw std::overflow_error("Weyl dimension exceeds 64 bits; use weyl_dim_str");
    return static_cast<long long>(d);
}

GoodFiltration good_filtration_factors(const RootSystem& R, const Weight& lambda, int r,
                                       long long p, bool force) {
    if (!is_good_prime(R, p) && !force) throw PrimeGateError("good prime required");
    GoodFiltration out;
    out.source = r == 1 ? classify_H3_Br(R, lambda, 1, p, force)
                        : classify_H3_Br(R, lambda, r, p, force);

    auto push = [&](const Weight& mu, long long mult) {
        if (mu.is_dominant()) {
            for (auto& [w, m] : out.factors)
                if (w == mu) {
                    m += mult;
                    return;
                }
            out.factors.push_back({mu, mult});
            return;
        }
        // dropped factors must have every induced sheaf vanish
        bool kills = false;
        for (std::size_t i = 0; i < R.rank(); ++i)
            if (mu[i] == -1) kills = true;
        if (!kills)
            throw FiltrationViolationError("dropped weight " + mu.str() +
                                           " does not pair to -1 with any simple coroot");
        out.dropped.push_back(mu);
    };

    switch (out.source.tag) {
    case CohClass::Tag::Zero:
        break;
    case CohClass::Tag::Line:
        push(out.source.nu, out.source.mult);
        break;
    case CohClass::Tag::UStarTensor: {
        // increasing height order of the u* weights
        for (const Root& root : R.positive_roots) push(root.omega + out.source.nu, 1);
        break;
    }
    }
    std::sort(out.factors.begin(), out.factors.end());
    cpp_int total = 0;
    for (const auto& [mu, mult] : out.factors) total += mult * weyl_dim_big(R, mu);
    out.total_dim = total.str();
    return out;
}

} // namespace frobcoh
