#pragma once

#include <string_view>

#include "legdga/dga.hpp"
#include "legdga/obstruction.hpp"
#include "legdga/rewrite.hpp"

namespace legdga::shipped {

/// The 6_2 Legendrian knot DGA (tb -7, maslov 0), identical to data/k6_2.dga.
std::string_view k62_text();

/// The projection recipe distinguishing the knot from its mirror, identical
/// to data/k6_2_proj.map.
std::string_view k62_projection_text();

/// The two-variable quotient by 1 + b a, identical to data/unknot.rules.
std::string_view unknot_rules_text();

ChekanovDGA k62();
ProjectionRecipe k62_projection(const AlgebraPtr& source);
RewriteSystem unknot_rules();

}  // namespace legdga::shipped
