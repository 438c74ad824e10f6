#include "legdga/shipped.hpp"

#include "legdga/dga_io.hpp"

namespace legdga::shipped {

namespace {

constexpr std::string_view kK62Text =
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
    "d a4 = a5 + a11 + a11 a7 a5 + a6 a10 a5\n"
    "d a5 = 0\n"
    "d a6 = a11 a8\n"
    "d a7 = a8 a10\n"
    "d a8 = 0\n"
    "d a9 = 1 + a10 a11\n"
    "d a10 = 0\n"
    "d a11 = 0\n";

constexpr std::string_view kK62ProjectionText =
    "# Projection of the K6_2 DGA onto the free algebra on two variables,\n"
    "# stated in the substituted coordinates below.\n"
    "gen al : -1   # alpha\n"
    "gen be : 1    # beta\n"
    "subst a3 -> 1 + a3\n"
    "subst a11 -> a5 + a11\n"
    "map a5 -> al\n"
    "map a10 -> be\n"
    "default -> 0\n";

constexpr std::string_view kUnknotRulesText =
    "# Quotient of the free algebra on a, b by the relation 1 + b a.\n"
    "gen a : -1   # alpha\n"
    "gen b : 1    # beta\n"
    "rule: b a -> 1\n";

}  // namespace

std::string_view k62_text() { return kK62Text; }
std::string_view k62_projection_text() { return kK62ProjectionText; }
std::string_view unknot_rules_text() { return kUnknotRulesText; }

ChekanovDGA k62() { return parse_dga(kK62Text, "k6_2.dga"); }

ProjectionRecipe k62_projection(const AlgebraPtr& source) {
    return parse_projection_recipe(kK62ProjectionText, source, "k6_2_proj.map");
}

RewriteSystem unknot_rules() { return parse_rules(kUnknotRulesText, "unknot.rules"); }

}  // namespace legdga::shipped
