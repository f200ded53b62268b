#include "doctest.h"

#include "frobcoh/root_system.hpp"

using namespace frobcoh;

TEST_CASE("positive root counts match the classical ones") {
    struct Row {
        char t;
        int n;
        std::size_t count;
    };
    const Row rows[] = {
        {'A', 1, 1},  {'A', 2, 3},  {'A', 5, 15}, {'B', 2, 4},  {'B', 3, 9},
        {'B', 6, 36}, {'C', 3, 9},  {'C', 6, 36}, {'D', 4, 12}, {'D', 6, 30},
        {'E', 6, 36}, {'E', 7, 63}, {'F', 4, 24}, {'G', 2, 6},
    };
    for (const Row& r : rows) {
        RootSystem R = build_root_system(r.t, r.n);
        CHECK(R.num_positive_roots() == r.count);
    }
}

TEST_CASE("rho has all fundamental coordinates equal to one") {
    for (const char* label : {"A4", "B5", "C4", "D5", "E6", "F4", "G2"}) {
        RootSystem R = build_root_system(label);
        for (std::size_t i = 0; i < R.rank(); ++i) CHECK(R.rho[i] == 1);
    }
}

TEST_CASE("Coxeter numbers") {
    CHECK(build_root_system('B', 3).coxeter_number == 6);
    CHECK(build_root_system('A', 1).coxeter_number == 2);
    CHECK(build_root_system('A', 4).coxeter_number == 5);
    CHECK(build_root_system('C', 4).coxeter_number == 8);
    CHECK(build_root_system('D', 5).coxeter_number == 8);
    CHECK(build_root_system('E', 6).coxeter_number == 12);
    CHECK(build_root_system('E', 7).coxeter_number == 18);
    CHECK(build_root_system('E', 8).coxeter_number == 30);
    CHECK(build_root_system('F', 4).coxeter_number == 12);
    CHECK(build_root_system('G', 2).coxeter_number == 6);
}

TEST_CASE("short/long conventions in B_n and C_n") {
    RootSystem B = build_root_system('B', 3);
    CHECK(B.positive_roots[B.rank() - 1].pi == std::vector<int>{0, 0, 1}); // simple roots first
    // alpha_3 short in B_3
    CHECK(B.root(2).is_short);
    CHECK_FALSE(B.root(0).is_short);
    RootSystem C = build_root_system('C', 3);
    CHECK(C.root(2).is_long);
    CHECK(C.root(0).is_short);
}

TEST_CASE("A1 has a single positive root and rho = omega_1") {
    RootSystem R = build_root_system('A', 1);
    REQUIRE(R.num_positive_roots() == 1);
    CHECK(R.root(0).omega == Weight{2});
    CHECK(R.rho == Weight{1});
}

TEST_CASE("B2 positive roots") {
    RootSystem R = build_root_system('B', 2);
    REQUIRE(R.num_positive_roots() == 4);
    std::vector<std::vector<int>> pis;
    for (const Root& r : R.positive_roots) pis.push_back(r.pi);
    // alpha_1, alpha_2, alpha_1+alpha_2, alpha_1+2alpha_2
    CHECK(pis == std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("C2 canonicalizes to B2 with the labeling recorded") {
    RootSystem C = build_root_system('C', 2);
    CHECK(C.type_label == 'B');
    CHECK(C.user_label == 'C');
    // C-label alpha_1 (short) is internal alpha_2
    Weight user_a1{1, 0};
    CHECK(C.to_internal(user_a1) == Weight{0, 1});
    CHECK(C.to_user(C.to_internal(user_a1)) == user_a1);
}

TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_AS(build_root_system('D', 3), InvalidTypeError);
    CHECK_THROWS_AS(build_root_system('E', 9), InvalidTypeError);
    CHECK_THROWS_AS(build_root_system('H', 4), InvalidTypeError);
    CHECK_THROWS_AS(build_root_system('B', 1), InvalidTypeError);
}

TEST_CASE("root lattice membership and pi coordinates") {
    RootSystem R = build_root_system('A', 2);
    CHECK(R.in_root_lattice(Weight{2, -1}));  // alpha_1
    CHECK(R.in_root_lattice(Weight{1, 1}));   // alpha_1 + alpha_2 = rho
    CHECK_FALSE(R.in_root_lattice(Weight{1, 0}));
    auto [num, den] = R.pi_coords(Weight{1, 0}); // omega_1 = (2alpha_1 + alpha_2)/3
    CHECK(den == 3);
    CHECK(num == std::vector<long long>{2, 1});
}

TEST_CASE("p-divisibility of weights") {
    RootSystem R = build_root_system('B', 2);
    Weight lam{5, 10};
    CHECK(lam.divisible_by(5));
    CHECK_FALSE(Weight{5, 1}.divisible_by(5));
    CHECK(R.in_p_root_lattice(Weight{0, 6}, 3)); // 3(alpha_1 + 2alpha_2)
    CHECK_FALSE(R.in_p_root_lattice(Weight{0, 2}, 3));
}

TEST_CASE("restricted decomposition") {
    RootSystem R = build_root_system('A', 1);
    auto [l0, l1] = restricted_decompose(Weight{0}, 5);
    CHECK(l0 == Weight{0});
    CHECK(l1 == Weight{0});

    auto [m0, m1] = restricted_decompose(Weight{5 * 7}, 5);
    CHECK(m0 == Weight{0});
    CHECK(m1 == Weight{7});

    // -alpha_1 = -2 omega_1 at p=5 -> (3 omega_1, -omega_1)
    auto [k0, k1] = restricted_decompose(Weight{-2}, 5);
    CHECK(k0 == Weight{3});
    CHECK(k1 == Weight{-1});
    (void)R;
}

TEST_CASE("restricted decomposition round-trips on random boxes") {
    for (const char* label : {"A3", "B3", "G2"}) {
        RootSystem R = build_root_system(label);
        for (long long p : {3LL, 5LL, 7LL}) {
            unsigned long long state = 12345;
            auto rnd = [&]() {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                return static_cast<long long>((state >> 33) % (6 * p * p + 1)) - 3 * p * p;
            };
            for (int trial = 0; trial < 200; ++trial) {
                Weight lam(R.rank());
                for (std::size_t i = 0; i < R.rank(); ++i) lam[i] = rnd();
                auto [l0, l1] = restricted_decompose(lam, p);
                CHECK(l0.is_restricted(p));
                CHECK(l0 + p * l1 == lam);
            }
        }
    }
}
