#include <doctest.h>

#include <fstream>
#include <sstream>

#include "legdga/dga_io.hpp"
#include "legdga/shipped.hpp"
#include "test_support.hpp"

using namespace legdga;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("the shipped 6_2 file parses to the expected DGA") {
    const auto dga = parse_dga(shipped::k62_text(), "k6_2.dga");
    CHECK(dga == testsupport::k62_dga());
    REQUIRE(dga.metadata().has_value());
    CHECK(dga.metadata()->display_name == "K6_2");
    CHECK(dga.metadata()->smooth_type == "6_2");
    CHECK(dga.metadata()->thurston_bennequin == -7);
    CHECK(dga.metadata()->maslov_number == 0);
    CHECK(dga.algebra()->grading_modulus() == 0);
}

TEST_CASE("data files match the embedded copies") {
    CHECK(slurp(LEGDGA_DATA_DIR "/k6_2.dga") == shipped::k62_text());
    CHECK(slurp(LEGDGA_DATA_DIR "/k6_2_proj.map") == shipped::k62_projection_text());
    CHECK(slurp(LEGDGA_DATA_DIR "/unknot.rules") == shipped::unknot_rules_text());
}

TEST_CASE("format is canonical and round-trips") {
    const auto dga = shipped::k62();
    const std::string once = format_dga(dga);
    CHECK(parse_dga(once) == dga);
    CHECK(format_dga(parse_dga(once)) == once);

    // Canonical form re-sorts the d a4 terms; everything else is unchanged.
    const std::string expected =
        "dga K6_2\n"
        "smooth 6_2\n"
        "tb -7\n"
        "maslov 0\n"
        "gen a1 : 1\n"
        "gen a2 : 1\n"
        "gen a3 : 0\n"
        "gen a4 : 0\n"
        "gen a5 : -1\n"
        "gen a6 : -1\n"
        "gen a7 : 1\n"
        "gen a8 : -1\n"
        "gen a9 : 1\n"
        "gen a10 : 1\n"
        "gen a11 : -1\n"
        "d a1 = 1 + a10 a5 a3\n"
        "d a2 = 1 + a3 + a3 a6 a10 + a3 a11 a7\n"
        "d a3 = 0\n"
        "d a4 = a5 + a11 + a6 a10 a5 + a11 a7 a5\n"
        "d a5 = 0\n"
        "d a6 = a11 a8\n"
        "d a7 = a8 a10\n"
        "d a8 = 0\n"
        "d a9 = 1 + a10 a11\n"
        "d a10 = 0\n"
        "d a11 = 0\n";
    CHECK(once == expected);
}

TEST_CASE("DGA parse errors carry the source location") {
    auto error_of = [](std::string_view text) {
        try {
            parse_dga(text, "test.dga");
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };

    CHECK(error_of("dga X\ngen a1 : 1\n") == "test.dga: missing differential for 'a1'");
    CHECK(error_of("dga X\ngen a1 : 1\nd a1 = 1 + a99\n") ==
          "test.dga:3: unknown generator 'a99'");
    CHECK(error_of("dga X\ngen a1 : 1\ngen a1 : 0\nd a1 = 0\n") ==
          "test.dga: duplicate generator 'a1'");
    CHECK(error_of("dga X\ngen a1 : 1\nd a1 = 0\nd a1 = 1\n") ==
          "test.dga:4: duplicate differential for 'a1'");
    CHECK(error_of("dga X\ngen a1 : one\nd a1 = 0\n") == "test.dga:2: invalid degree 'one'");
    CHECK(error_of("gen a1 : 1\nd a1 = 0\n") == "test.dga: missing 'dga <name>' line");
    CHECK(error_of("dga X\nfoo bar\n") == "test.dga:2: unknown directive 'foo'");
    CHECK(error_of("dga X\nd a9 = 0\n") == "test.dga:2: unknown generator 'a9'");
    CHECK(error_of("") == "test.dga: empty DGA document");
}

TEST_CASE("comments and blank lines are ignored") {
    const auto dga = parse_dga(
        "# a one-generator example\n"
        "dga T  # trailing comment\n"
        "\n"
        "maslov 0\n"
        "gen t : 1\n"
        "d t = 0\n");
    CHECK(dga.algebra()->size() == 1);
    CHECK(dga.display_name() == "T");
}

TEST_CASE("the maslov line fixes the grading modulus") {
    const auto dga = parse_dga("dga M\nmaslov 2\ngen x : 5\nd x = 0\n");
    CHECK(dga.algebra()->grading_modulus() == 4);
    CHECK(dga.algebra()->degree_of(dga.algebra()->index_of("x")) == 1);
}

TEST_CASE("the shipped projection recipe parses and binds") {
    const auto dga = shipped::k62();
    const auto recipe = shipped::k62_projection(dga.algebra());
    REQUIRE(recipe.substitutions.size() == 2);
    CHECK(recipe.substitutions[0].target == "a3");
    CHECK(recipe.substitutions[0].shift == Polynomial::unit(dga.algebra()));
    CHECK(recipe.substitutions[1].target == "a11");
    CHECK(recipe.substitutions[1].shift == Polynomial::generator(dga.algebra(), "a5"));

    const auto& map = recipe.map;
    CHECK(map.target()->size() == 2);
    CHECK(map.image(dga.algebra()->index_of("a5")) ==
          Polynomial::generator(map.target(), "al"));
    CHECK(map.image(dga.algebra()->index_of("a10")) ==
          Polynomial::generator(map.target(), "be"));
    CHECK(map.image(dga.algebra()->index_of("a1")).is_zero());
}

TEST_CASE("projection recipe validation") {
    const auto dga = shipped::k62();
    auto error_of = [&](std::string_view text) {
        try {
            parse_projection_recipe(text, dga.algebra(), "m.map");
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };

    CHECK(error_of("gen al : -1\nmap a5 -> al\n") ==
          "m.map: no image for generator 'a1' (add an explicit 'default -> 0' line)");
    CHECK(error_of("gen al : -1\nmap a99 -> al\ndefault -> 0\n") ==
          "m.map:2: unknown generator 'a99'");
    CHECK(error_of("gen al : -1\nsubst a3 -> 1\ndefault -> 0\n") ==
          "m.map:2: substitution image must have the form a3 + shift");
    CHECK(error_of("gen al : -1\nmap a5 -> al\nmap a5 -> al\ndefault -> 0\n") ==
          "m.map:3: duplicate image for 'a5'");
    CHECK(error_of("gen al : -1\ndefault -> al\n") ==
          "m.map:2: the only supported default is 'default -> 0'");
    // a10 has degree 1, al degree -1: not grading-preserving.
    CHECK(error_of("gen al : -1\nmap a10 -> al\ndefault -> 0\n").find(
              "not grading-preserving") != std::string::npos);
}

TEST_CASE("rules files accept oriented rules and raw relations") {
    const auto from_rule = shipped::unknot_rules();
    REQUIRE(from_rule.rules().size() == 1);
    CHECK(from_rule.algebra()->to_string(from_rule.rules().front().lhs) == "b a");
    CHECK(from_rule.rules().front().rhs == Polynomial::unit(from_rule.algebra()));

    const auto from_rel = parse_rules(
        "gen a : -1\n"
        "gen b : 1\n"
        "rel: 1 + b a\n");
    CHECK(from_rel.rules().size() == 1);
    CHECK(from_rel.algebra()->to_string(from_rel.rules().front().lhs) == "b a");

    CHECK_THROWS_AS(parse_rules("gen a : 0\nrule: -> 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("gen a : 0\nrule: c -> 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("gen a : 0\nrel: 1\n"), ParseError);
}

TEST_CASE("mirror and substitution round-trip through the text format") {
    const auto dga = shipped::k62();
    CHECK(parse_dga(format_dga(mirror(dga))) == mirror(dga));
    const auto substituted =
        apply_automorphisms(dga, testsupport::k62_substitutions(dga.algebra()));
    CHECK(parse_dga(format_dga(substituted)) == substituted);
}
