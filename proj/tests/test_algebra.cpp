#include "test_util.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

using namespace genusbound;
using testutil::vec;

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::hyperbolic()), 0, 1),
                    InvalidArgumentError);  // odd tilde_b1
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::hyperbolic()), 1, 2),
                    InvalidArgumentError);  // tilde_b1 > b1
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::hyperbolic()), 2, 0, vec({1, 0})),
                    InvalidArgumentError);  // F without T
    // F defaults to the first basis vector on U and V
    auto c3 = make_algebra(make_form(FormTag::hyperbolic()), 2, 2);
    CHECK(c3.f() == vec({1, 0}));
    // F must be that vector
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::hyperbolic()), 2, 2, vec({0, 1})),
                    InvalidArgumentError);
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::vform()), 2, 2, vec({2, 0})),
                    InvalidArgumentError);  // imprimitive
    // Odd forms have no null basis vector, so F must be explicit there
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::odd(2)), 2, 2), InvalidArgumentError);
    auto odd_t = make_algebra(make_form(FormTag::odd(2)), 2, 2, vec({1, -1, 0}));
    CHECK(norm(odd_t.form, odd_t.f()) == 0);
    CHECK_THROWS_AS(make_algebra(make_form(FormTag::odd(2)), 2, 2, vec({1, 0, 0})),
                    InvalidArgumentError);  // F.F != 0
}

TEST_CASE("modified euler and 2chi+3sigma") {
    CHECK(modified_euler(make_algebra(make_form(FormTag::hyperbolic()), 0, 0)) == 4);
    CHECK(modified_euler(make_algebra(make_form(FormTag::hyperbolic()), 2, 2)) == 0);
    CHECK(modified_euler(make_algebra(make_form(FormTag::even(1)), 0, 0)) == 12);

    CHECK(two_chi_three_sigma(make_algebra(make_form(FormTag::odd(9)), 0, 0)) == 0);
    CHECK(two_chi_three_sigma(make_algebra(make_form(FormTag::vform()), 2, 2)) == 0);
    CHECK(two_chi_three_sigma(make_algebra(make_form(FormTag::hyperbolic()), 4, 4)) == -8);
}

TEST_CASE("2chi+3sigma identity holds across tags and tilde_b1") {
    std::vector<FormTag> tags = {FormTag::odd(0),      FormTag::odd(2), FormTag::odd(9),
                                 FormTag::hyperbolic(), FormTag::vform(), FormTag::even(1)};
    for (const auto& tag : tags) {
        auto form = make_form(tag);
        for (Int tb1 : {0, 2, 4, 6}) {
            std::optional<Vec> f;
            if (tb1 > 0) {
                if (tag.kind == FormKind::Odd) {
                    if (tag.param == 0) continue;  // no primitive null vector
                    Vec fv = Vec::Zero(form.rank);
                    fv[0] = 1;
                    fv[1] = -1;
                    f = fv;
                }
            }
            auto alg = make_algebra(form, tb1, tb1, f);
            CHECK(two_chi_three_sigma(alg) == form.sigma() + 8 - 4 * tb1);
        }
    }
}

TEST_CASE("lefschetz reduction splits off the kernel rank") {
    auto a = make_algebra(make_form(FormTag::hyperbolic()), 5, 2);
    auto r = lefschetz_reduce(a);
    CHECK(r.split_count == 3);
    CHECK(r.reduced.b1 == 2);
    CHECK(r.reduced.tilde_b1 == 2);
    CHECK(r.reduced.form.gram == a.form.gram);
    CHECK(r.reduced.f() == a.f());

    auto b = make_algebra(make_form(FormTag::odd(3)), 0, 0);
    auto rb = lefschetz_reduce(b);
    CHECK(rb.split_count == 0);
    CHECK(rb.reduced.b1 == 0);

    auto c = make_algebra(make_form(FormTag::even(1)), 4, 0);
    auto rc = lefschetz_reduce(c);
    CHECK(rc.split_count == 4);
    CHECK(rc.reduced.b1 == 0);

    // idempotent, and invariant under the classification
    auto rr = lefschetz_reduce(r.reduced);
    CHECK(rr.split_count == 0);
    CHECK(rr.reduced.b1 == r.reduced.b1);
    CHECK(classify_case(a) == classify_case(r.reduced));
}

TEST_CASE("case classification") {
    CHECK(classify_case(make_algebra(make_form(FormTag::hyperbolic()), 0, 0)) == CaseTag::Case1);
    CHECK(classify_case(make_algebra(make_form(FormTag::even(0)), 3, 0)) == CaseTag::Case1);
    CHECK(classify_case(make_algebra(make_form(FormTag::even(1)), 0, 0)) == CaseTag::Case2);
    CHECK(classify_case(make_algebra(make_form(FormTag::hyperbolic()), 2, 2)) == CaseTag::Case3);
    CHECK(classify_case(make_algebra(make_form(FormTag::odd(2)), 0, 0)) == CaseTag::Case4);
    CHECK(classify_case(make_algebra(make_form(FormTag::odd(9)), 1, 0)) == CaseTag::Case4);
    CHECK(classify_case(make_algebra(make_form(FormTag::vform()), 2, 2)) == CaseTag::Case5);
    CHECK(classify_case(make_algebra(make_form(FormTag::hyperbolic()), 4, 4)) ==
          CaseTag::Extended42_1);
    CHECK(classify_case(make_algebra(make_form(FormTag::vform()), 6, 6)) ==
          CaseTag::Extended42_2);
    CHECK(classify_case(make_algebra(make_form(FormTag::odd(10)), 0, 0)) ==
          CaseTag::Unsupported);
    CHECK(classify_case(make_algebra(make_form(FormTag::even(2)), 0, 0)) ==
          CaseTag::Unsupported);
    CHECK(classify_case(make_algebra(make_form(FormTag::even(1)), 2, 2)) ==
          CaseTag::Unsupported);
    CHECK(classify_case(make_algebra(make_form(FormTag::odd(2)), 2, 2, vec({1, -1, 0}))) ==
          CaseTag::Unsupported);
}

TEST_CASE("algebra json round trip") {
    nlohmann::json j = {{"form", {{"tag", "odd"}, {"n", 2}}}, {"b1", 3}, {"tilde_b1", 0}};
    auto alg = algebra_from_json(j);
    CHECK(alg.form.tag == FormTag::odd(2));
    CHECK(alg.b1 == 3);
    auto j2 = algebra_to_json(alg);
    auto alg2 = algebra_from_json(j2);
    CHECK(alg2.form.tag == alg.form.tag);
    CHECK(alg2.b1 == alg.b1);
    CHECK(alg2.tilde_b1 == alg.tilde_b1);

    nlohmann::json jf = {{"form", {{"tag", "hyperbolic"}}},
                         {"b1", 2},
                         {"tilde_b1", 2},
                         {"F", {1, 0}}};
    auto algf = algebra_from_json(jf);
    CHECK(algf.f() == vec({1, 0}));
    CHECK(algebra_to_json(algf)["F"] == nlohmann::json({1, 0}));

    CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"b1", 1}}), InvalidArgumentError);
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"form", {{"tag", "weird"}}}}),
                    InvalidArgumentError);
}
