#include "doctest.h"

#include "frobcoh/root_sums.hpp"

using namespace frobcoh;

using Kind = RootSumSolution::Kind;

TEST_CASE("p-multiples of weights exist only below p = 5") {
    RootSystem B2 = build_root_system('B', 2);
    auto sols = check_p_multiple(B2, 3);
    // alpha_1 + (alpha_1+alpha_2) + (alpha_1+2alpha_2) = 3(alpha_1+alpha_2)
    bool found = false;
    for (const auto& s : sols)
        if (s.nu == B2.omega_of_pi({1, 1})) found = true;
    CHECK(found);

    for (const char* label : {"A3", "B3", "C4", "D4", "F4", "G2"})
        for (long long p : {5LL, 7LL}) CHECK(check_p_multiple(build_root_system(label), p).empty());

    CHECK(check_p_multiple(build_root_system('A', 1), 3).empty());
}

TEST_CASE("two-root right-hand sides at p = 5: the exception catalogs") {
    for (const char* label : {"G2", "B3", "B4", "F4"}) {
        RootSystem R = build_root_system(label);
        auto sols = check_two_root_rhs(R, 5);
        auto catalog = expected_catalog(R, 5, Kind::two_root);
        REQUIRE(catalog.has_value());
        CHECK(sols == *catalog);
        CHECK_FALSE(sols.empty());
    }
    // B_n family has n-2 members
    CHECK(check_two_root_rhs(build_root_system('B', 4), 5).size() == 2);
    CHECK(check_two_root_rhs(build_root_system('G', 2), 5).size() == 1);
    CHECK(check_two_root_rhs(build_root_system('F', 4), 5).size() == 2);
}

TEST_CASE("two-root right-hand sides vanish at the admissible primes") {
    for (const char* label : {"A4", "C3", "C4", "D4", "E6"})
        CHECK(check_two_root_rhs(build_root_system(label), 5).empty());
    for (const char* label : {"B3", "B4", "F4", "G2"})
        CHECK(check_two_root_rhs(build_root_system(label), 7).empty());
}

TEST_CASE("triple right-hand sides: C_n at p = 5") {
    RootSystem C3 = build_root_system('C', 3);
    auto s3 = check_triple_rhs(C3, 5);
    auto cat3 = expected_catalog(C3, 5, Kind::triple);
    REQUIRE(cat3.has_value());
    CHECK(s3.size() == 3);
    CHECK(s3 == *cat3);

    RootSystem C4 = build_root_system('C', 4);
    auto s4 = check_triple_rhs(C4, 5);
    auto cat4 = expected_catalog(C4, 5, Kind::triple);
    REQUIRE(cat4.has_value());
    CHECK(s4.size() == 10); // 9 from the first family plus one more
    CHECK(s4 == *cat4);
}

TEST_CASE("triple right-hand sides: exceptional types") {
    RootSystem G = build_root_system('G', 2);
    auto sg = check_triple_rhs(G, 7);
    REQUIRE(sg.size() == 1);
    CHECK(sg == *expected_catalog(G, 7, Kind::triple));

    RootSystem F = build_root_system('F', 4);
    auto sf = check_triple_rhs(F, 7);
    CHECK(sf.size() == 7);
    CHECK(sf == *expected_catalog(F, 7, Kind::triple));
}

TEST_CASE("triple right-hand sides vanish at the admissible primes") {
    CHECK(check_triple_rhs(build_root_system('D', 4), 5).empty());
    CHECK(check_triple_rhs(build_root_system('B', 2), 5).empty());
    CHECK(check_triple_rhs(build_root_system('A', 3), 5).empty());
    CHECK(check_triple_rhs(build_root_system('A', 4), 7).empty());
    CHECK(check_triple_rhs(build_root_system('C', 3), 7).empty());
    CHECK(check_triple_rhs(build_root_system('G', 2), 11).empty());
}

TEST_CASE("the bad type-A cases really do have solutions") {
    CHECK_FALSE(check_triple_rhs(build_root_system('A', 4), 5).empty());
    CHECK_FALSE(check_triple_rhs(build_root_system('A', 6), 7).empty());
}

TEST_CASE("simple right-hand sides: exactly two solutions for A4 at p = 5") {
    RootSystem A4 = build_root_system('A', 4);
    auto sols = check_simple_rhs(A4, 5);
    auto cat = expected_catalog(A4, 5, Kind::simple_rhs);
    REQUIRE(cat.has_value());
    REQUIRE(sols.size() == 2);
    CHECK(sols == *cat);

    CHECK(check_simple_rhs(A4, 7).empty());
    CHECK(check_simple_rhs(build_root_system('B', 3), 5).empty());
    CHECK(check_simple_rhs(build_root_system('A', 6), 7).empty());
    CHECK(check_simple_rhs(build_root_system('C', 3), 5).empty());
}

TEST_CASE("every emitted solution re-validates by substitution") {
    for (const char* label : {"B2", "B3", "C3", "G2"}) {
        RootSystem R = build_root_system(label);
        for (long long p : {3LL, 5LL}) {
            for (const auto& s : check_p_multiple(R, p)) CHECK(s.validate(p));
            for (const auto& s : check_two_root_rhs(R, p)) CHECK(s.validate(p));
            for (const auto& s : check_triple_rhs(R, p)) CHECK(s.validate(p));
            for (const auto& s : check_simple_rhs(R, p)) CHECK(s.validate(p));
        }
    }
}

TEST_CASE("digit-bounded root sums force nu = 0 (randomized)") {
    struct Row {
        const char* label;
        long long p;
    };
    for (const Row& row : {Row{"A5", 5}, Row{"B4", 7}, Row{"C4", 7}, Row{"D5", 7}, Row{"G2", 11}}) {
        RootSystem R = build_root_system(row.label);
        long long p = row.p;
        int m = static_cast<int>(R.num_positive_roots());
        unsigned long long st = 99991;
        auto rnd = [&](long long hi) {
            st = st * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<long long>((st >> 33) % static_cast<unsigned long long>(hi));
        };
        for (int trial = 0; trial < 10000; ++trial) {
            int a = static_cast<int>(rnd(R.rank_n));
            int s1 = static_cast<int>(rnd(m + 1)) - 1;
            int s2 = static_cast<int>(rnd(m + 1)) - 1;
            Weight gamma = R.root(a).omega;
            if (s1 >= 0) gamma += R.root(s1).omega;
            if (s2 >= 0) gamma += R.root(s2).omega;
            std::vector<int> digits(R.rank());
            Weight sigma(R.rank());
            for (std::size_t i = 0; i < R.rank(); ++i) {
                digits[i] = static_cast<int>(rnd(p));
                sigma += digits[i] * R.simple_root(static_cast<int>(i));
            }
            Weight diff = gamma - sigma;
            if (!diff.divisible_by(p)) continue;
            Weight nu = diff.divided(p);
            bool type_a_side = R.type_label == 'A' &&
                               ((R.rank_n + 1) % p == 0 ? R.in_root_lattice(nu) : true);
            if (R.type_label != 'A' || type_a_side) CHECK(nu.is_zero());
        }
    }
}
