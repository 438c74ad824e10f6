#include <doctest.h>

#include <random>

#include "legdga/obstruction.hpp"
#include "test_support.hpp"

using namespace legdga;
using testsupport::k62_dga;
using testsupport::k62_projection_map;
using testsupport::k62_recipe;
using testsupport::k62_substitutions;
using testsupport::random_poly;
using testsupport::two_var_algebra;

namespace {

ChekanovDGA substituted_k62() {
    const auto dga = k62_dga();
    return apply_automorphisms(dga, k62_substitutions(dga.algebra()));
}

}  // namespace

TEST_CASE("projection is unital, multiplicative, and grading-preserving") {
    const auto dga = substituted_k62();
    const auto target = two_var_algebra();
    const auto pi = k62_projection_map(dga.algebra(), target);
    auto t = [&](std::string_view s) { return parse_polynomial(target, s); };

    CHECK(project(pi, dga.differential("a1")) == t("1 + be al"));
    CHECK(project(pi, Polynomial::unit(dga.algebra())) == t("1"));
    CHECK(project(pi, dga.differential("a4")).is_zero());
    CHECK(project(pi, dga.differential("a2")).is_zero());
}

TEST_CASE("projections must preserve the grading") {
    const auto source = two_var_algebra();
    const auto target = two_var_algebra();
    // al (degree -1) mapped to be (degree +1) is rejected.
    CHECK_THROWS_AS(ProjectionMap(source, target,
                                  {Polynomial::generator(target, "be"),
                                   Polynomial::zero(target)}),
                    Error);
}

TEST_CASE("projection respects products on random elements") {
    const auto dga = substituted_k62();
    const auto pi = k62_projection_map(dga.algebra(), two_var_algebra());
    std::mt19937 rng(808);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng, dga.algebra(), 3, 4);
        const auto q = random_poly(rng, dga.algebra(), 3, 4);
        CHECK(project(pi, p * q) == project(pi, p) * project(pi, q));
        CHECK(project(pi, p + q) == project(pi, p) + project(pi, q));
    }
}

TEST_CASE("the projected boundary ideal is generated by 1 + be al") {
    const auto dga = substituted_k62();
    const auto target = two_var_algebra();
    const auto pi = k62_projection_map(dga.algebra(), target);
    const auto images = ideal_images(pi, dga);
    REQUIRE(images.size() == 1);
    CHECK(images.front() == parse_polynomial(target, "1 + be al"));
}

TEST_CASE("the zero map has no ideal images") {
    // The projection is unital, so a differential with a constant term would
    // still project to 1; use a unit-free DGA.
    const auto source = Algebra::make({{"u", 1}, {"v", 0}});
    const ChekanovDGA dga(source,
                          {Polynomial::generator(source, "v"), Polynomial::zero(source)});
    REQUIRE(check_axioms(dga).ok());
    const auto target = two_var_algebra();
    std::vector<Polynomial> zeros(source->size(), Polynomial::zero(target));
    const ProjectionMap pi(source, target, std::move(zeros));
    CHECK(ideal_images(pi, dga).empty());

    // On the knot DGA the unit terms of the differentials survive any map.
    const auto knot = k62_dga();
    std::vector<Polynomial> knot_zeros(knot.algebra()->size(), Polynomial::zero(target));
    const ProjectionMap zero_map(knot.algebra(), target, std::move(knot_zeros));
    const auto images = ideal_images(zero_map, knot);
    REQUIRE(images.size() == 1);
    CHECK(images.front().is_unit());
}

TEST_CASE("the paper witnesses verify") {
    const auto dga = k62_dga();
    const auto alg = dga.algebra();
    auto p = [&](std::string_view s) { return parse_polynomial(alg, s); };

    CHECK(verify_witness(dga, {p("a10"), p("a5 a3"), p("a1"), 1, -1}).valid);
    CHECK(verify_witness(dga, {p("a10"), p("a11"), p("a9"), 1, -1}).valid);

    const auto bad = verify_witness(dga, {p("a10"), p("a5"), p("a1"), 1, -1});
    CHECK_FALSE(bad.valid);
    CHECK(bad.diagnostic == "1 + x y != d(z)");

    const auto mirrored = mirror(dga);
    CHECK(verify_witness(mirrored, {p("a3 a5"), p("a10"), p("a1"), -1, 1}).valid);
}

TEST_CASE("witness diagnostics name the first failed condition") {
    const auto dga = k62_dga();
    const auto alg = dga.algebra();
    auto p = [&](std::string_view s) { return parse_polynomial(alg, s); };

    CHECK(verify_witness(dga, {p("a10"), p("a11"), p("a9"), 1, 1}).diagnostic ==
          "degrees (1, 1) do not satisfy p + q = 0");
    CHECK(verify_witness(dga, {p("a3"), p("a11"), p("a9"), 1, -1}).diagnostic ==
          "x is not homogeneous of degree 1");
    CHECK(verify_witness(dga, {p("a7"), p("a11"), p("a9"), 1, -1}).diagnostic ==
          "x is not a cycle: d(x) != 0");
    CHECK(verify_witness(dga, {p("a10"), p("a11"), p("a3"), 1, -1}).diagnostic ==
          "z is not homogeneous of degree 1");
}

TEST_CASE("mirroring transports witnesses with the factors swapped") {
    const auto dga = k62_dga();
    const auto mirrored = mirror(dga);
    const auto alg = dga.algebra();
    auto p = [&](std::string_view s) { return parse_polynomial(alg, s); };

    const Witness w{p("a10"), p("a5 a3"), p("a1"), 1, -1};
    const Witness rev = reversed(w);
    CHECK(rev.x == p("a3 a5"));
    CHECK(rev.y == p("a10"));
    CHECK(rev.p == -1);
    CHECK(verify_witness(mirrored, rev).valid);

    std::mt19937 rng(909);
    for (int i = 0; i < 200; ++i) {
        const Witness candidate{random_poly(rng, alg, 2, 3), random_poly(rng, alg, 2, 3),
                                random_poly(rng, alg, 2, 3), 1, -1};
        CHECK(verify_witness(dga, candidate).valid ==
              verify_witness(mirrored, reversed(candidate)).valid);
    }
}

TEST_CASE("bounded search finds the paper witness first") {
    const auto dga = k62_dga();
    const auto alg = dga.algebra();
    auto p = [&](std::string_view s) { return parse_polynomial(alg, s); };

    const auto found = search_witness(dga, 1, -1, 2);
    REQUIRE(found.has_value());
    CHECK(found->x == p("a10"));
    CHECK(found->y == p("a11"));
    CHECK(found->z == p("a9"));
    CHECK(verify_witness(dga, *found).valid);

    const auto again = search_witness(dga, 1, -1, 2);
    REQUIRE(again.has_value());
    CHECK(again->x == found->x);
    CHECK(again->y == found->y);
    CHECK(again->z == found->z);
}

TEST_CASE("search on the mirror finds the reversed witness") {
    const auto mirrored = mirror(k62_dga());
    const auto alg = mirrored.algebra();
    auto p = [&](std::string_view s) { return parse_polynomial(alg, s); };

    const auto found = search_witness(mirrored, -1, 1, 2);
    REQUIRE(found.has_value());
    CHECK(found->x == p("a11"));
    CHECK(found->y == p("a10"));
    CHECK(found->z == p("a9"));
    CHECK(verify_witness(mirrored, *found).valid);
}

TEST_CASE("search returns nothing when no witness exists in bounds") {
    const auto dga = k62_dga();
    CHECK_FALSE(search_witness(dga, 0, 0, 1).has_value());

    const ChekanovDGA empty(Algebra::make({}), {});
    CHECK_FALSE(search_witness(empty, 1, -1, 3).has_value());
}

TEST_CASE("the quotient argument refutes 1 in H_-1 * H_1") {
    const auto dga = substituted_k62();
    const auto pi = k62_projection_map(dga.algebra(), two_var_algebra());
    const auto report = refute_unit_product(dga, -1, 1, pi, 9);

    CHECK(report.status == RefutationStatus::refuted_structural);
    CHECK(report.refuted());
    CHECK_FALSE(report.unit_pair.has_value());
    CHECK(report.pairs_checked == 25);
    REQUIRE(report.left_words.size() == 5);
    const Algebra& target = *report.target;
    CHECK(target.to_string(report.left_words[0]) == "al");
    CHECK(target.to_string(report.left_words[1]) == "al al be");
    CHECK(target.to_string(report.left_words[4]) == "al al al al al be be be be");
    CHECK(report.reason.find("i >= 1") != std::string::npos);
}

TEST_CASE("the same quotient cannot refute the witness direction") {
    const auto dga = substituted_k62();
    const auto pi = k62_projection_map(dga.algebra(), two_var_algebra());
    const auto report = refute_unit_product(dga, 1, -1, pi, 9);

    CHECK(report.status == RefutationStatus::inconclusive);
    CHECK_FALSE(report.refuted());
    REQUIRE(report.unit_pair.has_value());
    CHECK(report.target->to_string(report.unit_pair->first) == "be");
    CHECK(report.target->to_string(report.unit_pair->second) == "al");
}

TEST_CASE("a projected unit makes the quotient trivial and the check inconclusive") {
    // Without the generator substitutions the images contain 1 itself.
    const auto dga = k62_dga();
    const auto pi = k62_projection_map(dga.algebra(), two_var_algebra());
    const auto report = refute_unit_product(dga, -1, 1, pi, 5);
    CHECK(report.status == RefutationStatus::inconclusive);
    CHECK(report.reason.find("trivial") != std::string::npos);
}

TEST_CASE("degree obstruction short-circuits when p + q != 0") {
    const auto dga = substituted_k62();
    const auto pi = k62_projection_map(dga.algebra(), two_var_algebra());
    const auto report = refute_unit_product(dga, 1, 1, pi, 5);
    CHECK(report.status == RefutationStatus::refuted_structural);
    CHECK_FALSE(report.enumerated);
}

TEST_CASE("non-confluent projected ideals are an error, not a refutation") {
    // d(u1) = p q + q and d(u2) = q p + p project onto the divergent system
    // {a b -> b, b a -> a}.
    const auto source = Algebra::make({{"u1", 1}, {"u2", 1}, {"p", 0}, {"q", 0}});
    auto sp = [&](std::string_view s) { return parse_polynomial(source, s); };
    const ChekanovDGA dga(source, {sp("p q + q"), sp("q p + p"), sp("0"), sp("0")});
    REQUIRE(check_axioms(dga).ok());

    const auto target = Algebra::make({{"a", 0}, {"b", 0}});
    const ProjectionMap pi(source, target,
                           {Polynomial::zero(target), Polynomial::zero(target),
                            Polynomial::generator(target, "a"),
                            Polynomial::generator(target, "b")});
    bool threw = false;
    try {
        refute_unit_product(dga, 0, 0, pi, 4);
    } catch (const Error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("not locally confluent") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("distinguish separates the knot from its mirror") {
    const auto knot = k62_dga();
    const auto mirrored = mirror(knot);
    const auto recipe = k62_recipe(knot.algebra());

    const auto report = distinguish(knot, mirrored, 1, -1, recipe, 9);
    CHECK(report.verdict == Verdict::nonisomorphic);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness_check->valid);
    CHECK(report.refutation.status == RefutationStatus::refuted_structural);

    const auto certificate = format_certificate(report);
    CHECK(certificate.find("== verdict: nonisomorphic graded homology algebras ==") !=
          std::string::npos);
    CHECK(certificate.find("x = a10") != std::string::npos);
    CHECK(certificate.find("substitution: a3 -> 1 + a3") != std::string::npos);
    CHECK(certificate.find("rewrite rules: al be -> 1") != std::string::npos);
}

TEST_CASE("a DGA is never distinguished from itself") {
    const auto knot = k62_dga();
    const auto recipe = k62_recipe(knot.algebra());

    const auto same = distinguish(knot, knot, 1, -1, recipe, 9);
    CHECK(same.verdict == Verdict::undetermined);
    CHECK(same.witness.has_value());
    CHECK(same.refutation.status == RefutationStatus::inconclusive);
    CHECK(format_certificate(same).find("== verdict: undetermined ==") != std::string::npos);

    const auto high = distinguish(knot, knot, 2, -2, recipe, 3);
    CHECK(high.verdict == Verdict::undetermined);
    CHECK_FALSE(high.witness.has_value());
}

TEST_CASE("projected boundaries land in the projected ideal") {
    // pi(d(p)) must reduce to 0 modulo the ideal generated by the images.
    const auto dga = substituted_k62();
    const auto target = two_var_algebra();
    const auto pi = k62_projection_map(dga.algebra(), target);
    const auto images = ideal_images(pi, dga);
    const auto sys = orient_relations(target, images);
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng, dga.algebra(), 3, 4);
        const auto projected = project(pi, apply_differential(dga, p));
        CHECK(normal_form(sys, projected).is_zero());
    }
}

TEST_CASE("unit-product claims carry the certificate their status requires") {
    const auto knot = k62_dga();
    const auto recipe = k62_recipe(knot.algebra());

    const auto proved = decide_unit_product(knot, 1, -1, recipe, 2);
    CHECK(proved.status == ClaimStatus::proved_with_witness);
    REQUIRE(proved.witness.has_value());
    CHECK(verify_witness(knot, *proved.witness).valid);
    CHECK_FALSE(proved.refutation.has_value());
    CHECK(to_string(proved.status) == "proved-with-witness");

    const auto refuted = decide_unit_product(knot, -1, 1, recipe, 9);
    CHECK(refuted.status == ClaimStatus::refuted_via_projection);
    CHECK_FALSE(refuted.witness.has_value());
    REQUIRE(refuted.refutation.has_value());
    CHECK(refuted.refutation->refuted());

    const auto open = decide_unit_product(knot, 2, -2, recipe, 2);
    CHECK(open.status == ClaimStatus::undetermined);
    CHECK_FALSE(open.witness.has_value());
    REQUIRE(open.refutation.has_value());
    CHECK_FALSE(open.refutation->refuted());
}

TEST_CASE("every witness the search returns verifies") {
    const auto knot = k62_dga();
    const auto mirrored = mirror(knot);
    for (const auto& dga : {knot, mirrored}) {
        for (const auto [p, q] : {std::pair{1, -1}, std::pair{-1, 1}}) {
            const auto found = search_witness(dga, p, q, 2);
            if (found) CHECK(verify_witness(dga, *found).valid);
        }
    }
}

TEST_CASE("search budget overflow raises an error") {
    const auto dga = k62_dga();
    SearchOptions tight;
    tight.budget = 50;
    CHECK_THROWS_AS(search_witness(dga, 2, -2, 3, tight), BudgetError);
}
