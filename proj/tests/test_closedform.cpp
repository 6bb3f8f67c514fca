#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace genusbound;
using testutil::vec;

namespace {

Int binom2(Int m) { return m * (m - 1) / 2; }

}  // namespace

TEST_CASE("c_zero per case") {
    CHECK(c_zero(testutil::case1_alg()) == vec({2, 2}));
    CHECK(c_zero(testutil::case2_alg()) == Vec::Zero(10));
    CHECK(c_zero(testutil::case3_alg()) == vec({0, 2}));
    CHECK(c_zero(testutil::case4_alg(5)) == vec({3, -1, -1, -1, -1, -1}));
    CHECK(c_zero(testutil::case5_alg()) == vec({1, -2}));
    CHECK(c_zero(testutil::ext1_alg()) == vec({0, 2}));
    CHECK(c_zero(testutil::ext2_alg()) == vec({-1, 2}));
    CHECK_THROWS_AS(c_zero(make_algebra(make_form(FormTag::odd(10)), 0, 0)),
                    UnsupportedCaseError);
}

TEST_CASE("c_zero certification") {
    std::vector<AlgebraDescriptor> five;
    five.push_back(testutil::case1_alg());
    five.push_back(testutil::case2_alg());
    five.push_back(testutil::case3_alg());
    for (Int n : {0, 3, 9}) five.push_back(testutil::case4_alg(n));
    five.push_back(testutil::case5_alg());
    for (const auto& alg : five) {
        Vec c0 = c_zero(alg);
        CHECK(is_characteristic(alg.form, c0));
        CHECK(norm(alg.form, c0) == two_chi_three_sigma(alg));
        CHECK(is_reduced(alg, c0));
        if (!alg.t_trivial()) CHECK(pair(alg.form, c0, alg.f()) != 0);
        auto verdict = is_adjunction_class(alg, c0);
        CHECK(verdict.any());
    }
    // extended cases: still adjunction classes of type II, reduced, F-pairing
    for (const auto& alg : {testutil::ext1_alg(), testutil::ext2_alg(6)}) {
        Vec c0 = c_zero(alg);
        CHECK(is_characteristic(alg.form, c0));
        CHECK(is_reduced(alg, c0));
        CHECK(pair(alg.form, c0, alg.f()) != 0);
        CHECK(is_adjunction_class(alg, c0).type_two);
    }
}

TEST_CASE("h_closed on the displayed formulas") {
    auto c40 = testutil::case4_alg(0);
    std::vector<Int> expect = {0, 0, 1, 3, 6};
    for (Int d = 1; d <= 5; ++d) CHECK(h_closed(c40, vec({d})) == expect[d - 1]);

    auto c3 = testutil::case3_alg();
    for (Int a = 1; a <= 8; ++a) CHECK(h_closed(c3, vec({a, 0})) == 1 - a);

    auto c41 = testutil::case4_alg(1);
    for (Int a = 1; a <= 8; ++a) CHECK(h_closed(c41, vec({a, -a})) == -(a - 1));

    // reduced-grid identities with the printed formulas
    auto c1 = testutil::case1_alg();
    for (Int a = 0; a <= 8; ++a)
        for (Int b = 0; b <= a; ++b)
            CHECK(h_closed(c1, vec({a, b})) ==
                  ((a == 0 && b == 0) ? 0 : (a - 1) * (b - 1)));
    for (Int a = 0; a <= 8; ++a)
        for (Int b = 0; b <= 8; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(h_closed(c3, vec({a, b})) == a * (b - 1) + 1);
        }
    auto c5 = testutil::case5_alg();
    for (Int a = 0; a <= 8; ++a)
        for (Int b = 0; b <= 8; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(h_closed(c5, vec({a, b})) == (b - 1) * (2 * a + b) / 2 + 1);
        }
    auto c44 = testutil::case4_alg(4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Vec a = testutil::random_reduced(c44, rng);
        if (is_zero(a)) continue;
        Int expect4 = binom2(a[0] - 1);
        for (Int i = 1; i <= 4; ++i) expect4 -= binom2(-a[i]);
        CHECK(h_closed(c44, a) == expect4);
    }
}

TEST_CASE("h_closed evaluates case 2 on the class as given") {
    auto c2 = testutil::case2_alg();
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        Vec a(10);
        for (Int i = 0; i < 10; ++i) a[i] = static_cast<Int>(rng() % 7) - 3;
        Int sq = norm(c2.form, a);
        if (sq < 0) continue;
        CHECK(h_closed(c2, a) == (is_zero(a) ? 0 : (sq + 2) / 2));
    }
    CHECK(h_closed(c2, Vec::Zero(10)) == 0);
}

TEST_CASE("case 5 keeps the absolute value on the negative branch") {
    // reduced classes with b <= -2a have 2a+b <= 0; the c-genus uses |c0.A|
    auto c5 = testutil::case5_alg();
    CHECK(h_closed(c5, vec({1, -4})) == 4);
    auto w = h_bruteforce(c5, vec({1, -4}), 9);
    REQUIRE(w.has_value());
    CHECK(w->value == 4);
    for (Int a = 1; a <= 5; ++a)
        for (Int b = -10; b <= -2 * a; ++b) {
            Int sq = b * (2 * a + b);
            if (sq < 0) continue;
            Int expected = 1 + (sq - std::abs(2 * a + b)) / 2;
            CHECK(h_closed(c5, vec({a, b})) == expected);
        }
}

TEST_CASE("h_closed is invariant on orbits") {
    std::mt19937_64 rng(19);
    std::vector<AlgebraDescriptor> algs;
    algs.push_back(testutil::case1_alg());
    algs.push_back(testutil::case3_alg());
    algs.push_back(testutil::case5_alg());
    algs.push_back(testutil::case4_alg(4));
    for (const auto& alg : algs) {
        for (int t = 0; t < 50; ++t) {
            Vec start = testutil::random_reduced(alg, rng);
            Vec moved = testutil::apply_word(alg, testutil::random_word(alg, rng, 10), start);
            CHECK(h_closed(alg, moved) == h_closed(alg, start));
        }
    }
}

TEST_CASE("case 2 positivity floor") {
    auto c2 = testutil::case2_alg();
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        Vec a(10);
        for (Int i = 0; i < 10; ++i) a[i] = static_cast<Int>(rng() % 5) - 2;
        if (is_zero(a) || norm(c2.form, a) < 0) continue;
        CHECK(h_closed(c2, a) >= 1);
    }
}

TEST_CASE("h_lower_bound in the extended cases") {
    auto e1 = testutil::ext1_alg();
    for (Int a = 0; a <= 6; ++a)
        for (Int b = 0; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(h_lower_bound(e1, vec({a, b})) == a * (b - 1) + 1);
        }
    auto e2 = testutil::ext2_alg();
    for (Int a = 1; a <= 6; ++a) CHECK(h_lower_bound(e2, vec({a, 0})) == 1 - a);
    CHECK(h_lower_bound(e1, vec({0, 0})) == 0);
    CHECK_THROWS_AS(h_lower_bound(testutil::case1_alg(), vec({1, 1})),
                    UnsupportedCaseError);
    CHECK_THROWS_AS(h_closed(e1, vec({1, 1})), UnsupportedCaseError);

    // the oracle can only do better than h_{c0} here
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        for (const auto& alg : {e1, e2}) {
            Vec a(2);
            a[0] = static_cast<Int>(rng() % 9) - 4;
            a[1] = static_cast<Int>(rng() % 9) - 4;
            if (norm(alg.form, a) < 0) continue;
            auto w = h_bruteforce(alg, a, 9);
            REQUIRE(w.has_value());
            CHECK(w->value >= h_lower_bound(alg, a));
        }
    }
}

TEST_CASE("sign classification on the worked examples") {
    CHECK(sign_class(testutil::case1_alg(), vec({3, 1})) == HSign::Zero);
    CHECK(sign_class(testutil::case4_alg(1), vec({2, -2})) == HSign::Negative);
    CHECK(sign_class(testutil::case4_alg(2), vec({3, -2, -1})) == HSign::Zero);
    CHECK(sign_class(testutil::case1_alg(), vec({4, 2})) == HSign::Positive);
    CHECK(sign_class(testutil::case2_alg(), Vec::Zero(10)) == HSign::Zero);
}

TEST_CASE("sign classification agrees with the formula on grids") {
    for (auto alg : {testutil::case1_alg(), testutil::case3_alg(), testutil::case5_alg()}) {
        for (Int a = -8; a <= 8; ++a)
            for (Int b = -8; b <= 8; ++b) {
                Vec x = vec({a, b});
                if (norm(alg.form, x) < 0) continue;
                Int h = h_closed(alg, x);
                HSign s = sign_class(alg, x);  // throws internally on mismatch
                CHECK((h < 0) == (s == HSign::Negative));
            }
    }
    std::mt19937_64 rng(59);
    for (Int n : {1, 2, 5, 9}) {
        auto alg = testutil::case4_alg(n);
        for (int t = 0; t < 100; ++t) {
            Vec x = testutil::random_reduced(alg, rng);
            Int h = h_closed(alg, x);
            HSign s = sign_class(alg, x);
            CHECK((h == 0) == (s == HSign::Zero));
        }
    }
}
