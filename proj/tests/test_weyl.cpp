#include "doctest.h"

#include "frobcoh/weyl.hpp"

using namespace frobcoh;

TEST_CASE("length equals the number of inversions") {
    for (const char* label : {"A3", "B3", "G2"}) {
        RootSystem R = build_root_system(label);
        for (int n = 0; n <= 4; ++n)
            for (const WeylElement& w : elements_of_length(R, n))
                CHECK(inversion_count(R, w) == n);
    }
}

TEST_CASE("level sizes match the Poincare polynomial") {
    for (const char* label : {"A3", "A5", "B4", "C3", "D4", "E6", "F4", "G2"}) {
        RootSystem R = build_root_system(label);
        for (int n = 0; n <= 4; ++n)
            CHECK(static_cast<long long>(elements_of_length(R, n).size()) ==
                  poincare_coefficient(R, n));
    }
}

TEST_CASE("A3 has six elements of length three") {
    RootSystem R = build_root_system('A', 3);
    CHECK(elements_of_length(R, 3).size() == 6);
}

TEST_CASE("lengths beyond the longest element give nothing") {
    RootSystem R = build_root_system('A', 1);
    CHECK(elements_of_length(R, 0).size() == 1);
    CHECK(elements_of_length(R, 1).size() == 1);
    CHECK(elements_of_length(R, 2).empty());
}

TEST_CASE("dot action basics") {
    RootSystem R = build_root_system('A', 2);
    WeylElement e = weyl_identity(R);
    Weight lam{3, -1};
    CHECK(e.dot(R, lam) == lam);

    // A2, w = s1 s2 s1: -w.0 = 2 alpha_1 + 2 alpha_2
    WeylElement w = weyl_word(R, {0, 1, 0});
    Weight expect = 2 * R.simple_root(0) + 2 * R.simple_root(1);
    CHECK(-w.dot(R, Weight(R.rank())) == expect);
}

TEST_CASE("dot action of w on 0 matches the telescoping root sum") {
    for (const char* label : {"A2", "A4", "A6", "B3", "B6", "C4", "D5", "E6", "F4", "G2"}) {
        RootSystem R = build_root_system(label);
        for (int n = 0; n <= 4; ++n) {
            for (const WeylElement& w : elements_of_length(R, n)) {
                Weight tele = minus_dot_zero_telescoped(R, w.word);
                CHECK(-w.dot(R, Weight(R.rank())) == tele);
                // each telescoped summand is a positive root
                for (std::size_t m = 0; m < w.word.size(); ++m) {
                    Weight v = R.simple_root(w.word[m]);
                    for (std::size_t k = m; k-- > 0;)
                        v = simple_reflection(R, w.word[k]).apply(v);
                    CHECK(R.is_positive_root(v));
                }
            }
        }
    }
}

TEST_CASE("length-3 dot weights have the two- or three-simple-root shape") {
    for (const char* label : {"A4", "B4", "C4", "D4", "F4", "G2"}) {
        RootSystem R = build_root_system(label);
        for (const WeylElement& w : elements_of_length(R, 3)) {
            Weight gamma = -w.dot(R, Weight(R.rank()));
            auto [num, den] = R.pi_coords(gamma);
            std::vector<long long> nz;
            for (std::size_t i = 0; i < R.rank(); ++i) {
                CHECK(num[i] % den == 0);
                long long c = num[i] / den;
                CHECK(c >= 0);
                if (c > 0) nz.push_back(c);
            }
            bool repeated = w.word[0] == w.word[2];
            std::vector<long long> coeff(R.rank());
            for (std::size_t i = 0; i < R.rank(); ++i) coeff[i] = num[i] / den;
            if (repeated) {
                REQUIRE(nz.size() == 2);
                // -w.0 = i beta_1 + j beta_2 with i >= j > 0
                CHECK(coeff[static_cast<std::size_t>(w.word[0])] >=
                      coeff[static_cast<std::size_t>(w.word[1])]);
                CHECK(coeff[static_cast<std::size_t>(w.word[1])] > 0);
            } else {
                REQUIRE(nz.size() == 3);
                CHECK(coeff[static_cast<std::size_t>(w.word[2])] == 1);
            }
        }
    }
}
