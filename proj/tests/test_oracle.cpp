#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "scarf/genfun.hpp"
#include "scarf/lattice.hpp"
#include "scarf/oracle.hpp"
#include "test_util.hpp"

using namespace scarf;
using namespace scarf::oracle;

TEST_CASE("T_8 for generators 2 and 3") {
    auto A = M({{2, 3}});
    auto cert = positive_functional(A);
    auto t = enumerate_Tb(A, cert, V({8}));
    std::set<Vec> got(t.begin(), t.end());
    CHECK(got == std::set<Vec>{V({4, 0}), V({1, 2})});
}

TEST_CASE("T_b is empty below grade zero") {
    auto A = M({{2, 3}});
    auto cert = positive_functional(A);
    CHECK(enumerate_Tb(A, cert, V({-5})).empty());
}

TEST_CASE("T_20 for generators 3, 4, 5 has six points") {
    auto A = M({{3, 4, 5}});
    auto cert = positive_functional(A);
    auto t = enumerate_Tb(A, cert, V({20}));
    CHECK(t.size() == 6);
    for (const Vec& xi : t) {
        CHECK(A.apply(xi) == V({20}));
        for (const Int& c : xi) CHECK(c >= 0);
    }
}

TEST_CASE("class counts for the sublattice example") {
    auto A = M({{2, 3}});
    auto cert = positive_functional(A);
    auto lam = LatticeBasis::span(2, {V({6, -4})});
    CHECK(count_classes(A, cert, lam, V({8})) == 2);
}

TEST_CASE("full kernel: one class per member") {
    auto A = M({{3, 4, 5}});
    auto cert = positive_functional(A);
    auto L = kernel_basis(A);
    for (long b = 0; b <= 25; ++b) {
        Int classes = count_classes(A, cert, L, Vec{Int(b)});
        bool member = !enumerate_Tb(A, cert, Vec{Int(b)}).empty();
        CHECK(classes == (member ? 1 : 0));
    }
}

TEST_CASE("trivial lattice: every representation is its own class") {
    auto A = M({{3, 4, 5}});
    auto cert = positive_functional(A);
    CHECK(count_classes(A, cert, LatticeBasis::zero(3), V({20})) == 6);
}

TEST_CASE("class count does not depend on the basis presentation") {
    auto A = M({{2, 3}});
    auto cert = positive_functional(A);
    auto lam1 = LatticeBasis::span(2, {V({6, -4})});
    auto lam2 = LatticeBasis::span(2, {V({-6, 4}), V({12, -8})});
    for (long b = 0; b <= 20; ++b)
        CHECK(count_classes(A, cert, lam1, Vec{Int(b)}) == count_classes(A, cert, lam2, Vec{Int(b)}));
}

TEST_CASE("membership table for (3, 4, 5) up to 10") {
    auto A = M({{3, 4, 5}});
    auto cert = positive_functional(A);
    auto table = membership_table(A, cert, Rat(10));
    for (long b : {0, 3, 4, 5, 6, 7, 8, 9, 10}) CHECK(table.member(Vec{Int(b)}));
    for (long b : {1, 2}) CHECK_FALSE(table.member(Vec{Int(b)}));
}

TEST_CASE("membership table for a single unit generator") {
    auto A = M({{1}});
    auto cert = positive_functional(A);
    auto table = membership_table(A, cert, Rat(12));
    for (long b = 0; b <= 12; ++b) CHECK(table.member(Vec{Int(b)}));
}

TEST_CASE("membership table for (11, 17, 23): the Frobenius gap closes at 104") {
    auto A = M({{11, 17, 23}});
    auto cert = positive_functional(A);
    auto table = membership_table(A, cert, Rat(160));
    CHECK_FALSE(table.member(V({104})));
    for (long b = 105; b <= 160; ++b) CHECK(table.member(Vec{Int(b)}));
}

TEST_CASE("member flag matches the representation count") {
    auto A = M({{3, 4, 5}});
    auto cert = positive_functional(A);
    auto table = membership_table(A, cert, Rat(30));
    for (long b = 0; b <= 30; ++b) {
        Vec v{Int(b)};
        CHECK(table.member(v) == (table.count(v) >= 1));
        CHECK(table.count(v) == Int(enumerate_Tb(A, cert, v).size()));
    }
}

TEST_CASE("representation counts equal the trivial-lattice series") {
    auto A = M({{3, 4, 5}});
    auto cert = positive_functional(A);
    RationalGF gf;
    gf.cert = cert;
    gf.numerator = LaurentPoly(1);
    gf.numerator.add_term(V({0}), 1);
    gf.denominator_exponents = A.columns();
    SeriesBox s = expand_series(gf, Rat(30));
    auto table = membership_table(A, cert, Rat(30));
    for (long b = 0; b <= 30; ++b) CHECK(s.at(Vec{Int(b)}) == table.count(Vec{Int(b)}));
}

TEST_CASE("brute Frobenius values") {
    CHECK(brute_frobenius({Int(2), Int(3)}) == 1);
    CHECK(brute_frobenius({Int(3), Int(4), Int(5)}) == 2);
    CHECK(brute_frobenius({Int(11), Int(17), Int(23)}) == 104);
    CHECK(brute_frobenius({Int(1), Int(5)}) == -1);  // no gaps at all
    CHECK_THROWS_AS(brute_frobenius({Int(4), Int(6)}), GcdNotOneError);
}

TEST_CASE("brute Frobenius is certified by a run of members") {
    auto A = M({{7, 9, 11}});
    auto cert = positive_functional(A);
    Int f = brute_frobenius({Int(7), Int(9), Int(11)});
    auto table = membership_table(A, cert, Rat(f + 8));
    CHECK_FALSE(table.member(Vec{f}));
    for (Int b = f + 1; b <= f + 7; ++b) CHECK(table.member(Vec{b}));
}

TEST_CASE("brute Frobenius on random coprime pairs matches the closed form") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> gen(2, 25);
    int done = 0;
    while (done < 10) {
        Int a = gen(rng), b = gen(rng);
        if (gcd(a, b) != 1) continue;
        ++done;
        CHECK(brute_frobenius({a, b}) == a * b - a - b);
    }
}
