#pragma once

#include <string>
#include <string_view>

#include "legdga/dga.hpp"
#include "legdga/obstruction.hpp"
#include "legdga/rewrite.hpp"

namespace legdga {

/// Parses the line-oriented DGA format:
///
///     dga K6_2
///     smooth 6_2
///     tb -7
///     maslov 0
///     gen a1 : 1
///     d a1 = 1 + a10 a5 a3
///
/// Every declared generator needs exactly one `d` line; zero differentials
/// are written out, not implied. `#` starts a comment. `source_name` is used
/// in error messages.
ChekanovDGA parse_dga(std::string_view text, std::string_view source_name = "<dga>");

/// Canonical rendering of a DGA in the same format; parse(format(d)) == d.
std::string format_dga(const ChekanovDGA& dga);

/// Parses a projection recipe against a source algebra:
///
///     gen al : -1          # target generator
///     subst a3 -> 1 + a3   # generator change applied before projecting
///     map a5 -> al
///     default -> 0
///
/// `map` images are polynomials over the target; unmapped source generators
/// need the explicit `default -> 0` line.
ProjectionRecipe parse_projection_recipe(std::string_view text, const AlgebraPtr& source,
                                         std::string_view source_name = "<map>");

/// Parses a rewrite-system file: `gen` lines declare the algebra, `rule:`
/// lines give oriented rules (`rule: b a -> 1`) and `rel:` lines give
/// relations to orient automatically (`rel: 1 + b a`).
RewriteSystem parse_rules(std::string_view text, std::string_view source_name = "<rules>");

}  // namespace legdga
