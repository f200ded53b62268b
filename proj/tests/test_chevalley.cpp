#include "doctest.h"

#include <cstdlib>

#include "frobcoh/chevalley.hpp"

using namespace frobcoh;

TEST_CASE("structure constant magnitudes from root strings") {
    // A2: the string alpha_2 - i alpha_1 leaves Phi immediately
    NilpotentAlgebra A = structure_constants(build_root_system('A', 2));
    CHECK(std::abs(A.n_neg(0, 1)) == 1);

    // B2: (alpha_1+alpha_2) - alpha_2 = alpha_1 is a root, so |N| = 2
    NilpotentAlgebra B = structure_constants(build_root_system('B', 2));
    int a12 = *B.R.root_index_pi({1, 1});
    CHECK(std::abs(B.n_neg(1, a12)) == 2);

    // non-root sums bracket to zero: alpha_1 + (alpha_1+2alpha_2) in B2
    int a122 = *B.R.root_index_pi({1, 2});
    CHECK(B.n_neg(0, a122) == 0);
    CHECK(B.sum_index(0, a122) == -1);
}

TEST_CASE("construction validates Jacobi for every small system") {
    for (const char* label : {"A1", "A4", "B4", "C4", "D4", "F4", "G2", "B6", "E6"}) {
        CHECK_NOTHROW(structure_constants(build_root_system(label)));
    }
}

TEST_CASE("alternative extraspecial order still gives a Chevalley basis") {
    for (const char* label : {"A3", "B3", "C3", "G2", "F4"}) {
        CHECK_NOTHROW(structure_constants(build_root_system(label), true));
    }
}

TEST_CASE("rank-3 d1 magnitudes match the hand tables up to one global sign") {
    // B3: d1(phi_{alpha_2+2alpha_3}) = +-2 phi_{alpha_3} ^ phi_{alpha_2+alpha_3}
    NilpotentAlgebra B = structure_constants(build_root_system('B', 3));
    int g = *B.R.root_index_pi({0, 1, 2});
    auto terms = B.d1_terms(g);
    REQUIRE(terms.size() == 1);
    auto [a, b, c] = terms[0];
    CHECK(a == *B.R.root_index_pi({0, 0, 1}));
    CHECK(b == *B.R.root_index_pi({0, 1, 1}));
    CHECK(std::abs(c) == 2);

    // all types: d1(phi_{alpha_1+alpha_2}) = +-phi_{alpha_1} ^ phi_{alpha_2}
    int g12 = *B.R.root_index_pi({1, 1, 0});
    auto t12 = B.d1_terms(g12);
    REQUIRE(t12.size() == 1);
    CHECK(std::abs(std::get<2>(t12[0])) == 1);

    // gamma simple: no decomposition
    CHECK(B.d1_terms(0).empty());

    // C3: d1(phi_{alpha_1+2alpha_2+alpha_3}) has three terms, all unit
    NilpotentAlgebra C = structure_constants(build_root_system('C', 3));
    int h = *C.R.root_index_pi({1, 2, 1});
    auto ht = C.d1_terms(h);
    REQUIRE(ht.size() == 3);
    for (auto& [x, y, cf] : ht) CHECK(std::abs(cf) == 1);

    // C3: d1(phi_{2alpha_1+2alpha_2+alpha_3}) = 2 a ^ b + 2 c ^ d
    int h2 = *C.R.root_index_pi({2, 2, 1});
    auto ht2 = C.d1_terms(h2);
    REQUIRE(ht2.size() == 2);
    for (auto& [x, y, cf] : ht2) CHECK(std::abs(cf) == 2);
}

TEST_CASE("ustar action is weight homogeneous") {
    NilpotentAlgebra A = structure_constants(build_root_system('B', 3));
    int m = static_cast<int>(A.dim());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto [tgt, c] = A.ustar_action(a, b);
            if (tgt < 0) continue;
            CHECK(A.R.root(tgt).omega ==
                  A.R.root(b).omega - A.R.root(a).omega);
            CHECK(c != 0); // integral constant nonzero whenever b-a is a root
        }
}
