#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legdga/algebra.hpp"
#include "legdga/dga.hpp"
#include "legdga/projection.hpp"
#include "legdga/rewrite.hpp"

namespace legdga {

/// The data certifying 1 in H_p * H_q: cycles x, y of degrees p, q and a
/// z of degree p + q + 1 with 1 + x y = d(z).
struct Witness {
    Polynomial x;
    Polynomial y;
    Polynomial z;
    int p = 0;
    int q = 0;
};

/// The mirror-side counterpart: (x, y, z, p, q) -> (rev y, rev x, rev z, q, p).
Witness reversed(const Witness& w);

struct WitnessCheck {
    bool valid = false;
    std::string diagnostic;  ///< "ok" or the first failed condition
};

/// Checks every witness condition by exact symbolic computation; failures
/// are reported in the diagnostic, never thrown.
WitnessCheck verify_witness(const ChekanovDGA& dga, const Witness& w);

struct SearchOptions {
    std::size_t max_terms = 2;         ///< words per candidate cycle
    std::size_t max_z_generators = 2;  ///< generators summed into z
    long long budget = 20'000'000;     ///< candidates + pairs examined
};

/// Bounded brute-force search for a witness. Candidate cycles are built from
/// nonempty words of length <= max_len, enumerated shortest-first; z ranges
/// over sums of generators of degree p + q + 1. Returns the first hit in the
/// deterministic enumeration order.
std::optional<Witness> search_witness(const ChekanovDGA& dga, int p, int q, std::size_t max_len,
                                      const SearchOptions& options = {});

enum class RefutationStatus { refuted_structural, refuted_bounded, inconclusive };

std::string to_string(RefutationStatus status);

struct RefuteOptions {
    std::size_t confluence_word_len = 8;
    long max_steps = RewriteSystem::kDefaultMaxSteps;
};

struct RefutationReport {
    RefutationStatus status = RefutationStatus::inconclusive;
    int p = 0;
    int q = 0;
    std::size_t max_len = 0;
    AlgebraPtr target;
    std::vector<Polynomial> images;  ///< deduplicated nonzero ideal images
    std::vector<RewriteRule> rules;
    ConfluenceReport confluence;
    bool enumerated = false;
    std::vector<Word> left_words;   ///< degree-p normal forms up to max_len
    std::vector<Word> right_words;  ///< degree-q normal forms up to max_len
    long long pairs_checked = 0;
    std::optional<std::pair<Word, Word>> unit_pair;  ///< product whose normal form hits 1
    std::string reason;

    bool refuted() const { return status != RefutationStatus::inconclusive; }
};

/// The quotient argument: project the boundary ideal, orient it into a
/// confluent rewrite system, and check that no product of a degree-p and a
/// degree-q normal form reaches 1. In the two-generator single-relation case
/// the bounded check upgrades to a structural refutation valid at every
/// length. A non-confluent system is an error, not a refutation.
RefutationReport refute_unit_product(const ChekanovDGA& dga, int p, int q,
                                     const ProjectionMap& pi, std::size_t max_len,
                                     const RefuteOptions& options = {});

/// Generator substitutions to apply before projecting; the projection is
/// stated in the substituted coordinates.
struct ProjectionRecipe {
    std::vector<ElementaryAutomorphism> substitutions;
    ProjectionMap map;
};

enum class ClaimStatus { proved_with_witness, refuted_via_projection, undetermined };

std::string to_string(ClaimStatus status);

/// A resolved membership claim "1 in H_p * H_q" for one DGA. A proved claim
/// stores a valid witness; a refuted one stores the refutation record
/// (projection, rewrite system, bound).
struct UnitProductClaim {
    ChekanovDGA dga;
    int p = 0;
    int q = 0;
    ClaimStatus status = ClaimStatus::undetermined;
    std::optional<Witness> witness;
    std::optional<RefutationReport> refutation;
};

/// Resolves the claim: searches for a witness first, then attempts the
/// recipe's refutation. The returned claim carries the certificate its
/// status requires.
UnitProductClaim decide_unit_product(const ChekanovDGA& dga, int p, int q,
                                     const ProjectionRecipe& recipe, std::size_t max_len,
                                     const SearchOptions& search_options = {},
                                     const RefuteOptions& refute_options = {});

std::vector<std::string> recipe_substitution_lines(const ProjectionRecipe& recipe);
std::vector<std::string> recipe_projection_lines(const ProjectionMap& map);

enum class Verdict { nonisomorphic, undetermined };

struct DistinguishReport {
    Verdict verdict = Verdict::undetermined;
    int p = 0;
    int q = 0;
    std::size_t max_len = 0;
    std::string left_name;
    std::string right_name;
    std::size_t left_generators = 0;
    std::size_t right_generators = 0;
    SearchOptions search_options;
    std::optional<Witness> witness;            ///< found on the left DGA
    std::optional<WitnessCheck> witness_check;
    RefutationReport refutation;               ///< on the right DGA
    std::vector<std::string> substitution_lines;
    std::vector<std::string> projection_lines;
};

/// Searches the left DGA for a witness in degrees (p, q) and runs the
/// refutation on the right DGA (after the recipe's substitutions) in the
/// same degrees. Both must succeed for the nonisomorphy verdict.
DistinguishReport distinguish(const ChekanovDGA& left, const ChekanovDGA& right, int p, int q,
                              const ProjectionRecipe& recipe, std::size_t max_len,
                              const SearchOptions& search_options = {},
                              const RefuteOptions& refute_options = {});

std::string format_refutation_section(const RefutationReport& report,
                                      const std::vector<std::string>& substitution_lines,
                                      const std::vector<std::string>& projection_lines);

/// Stable plain-text certificate embedding the witness polynomials, the
/// projection table, the rewrite rules, the bound, and the verdict line.
std::string format_certificate(const DistinguishReport& report);

}  // namespace legdga
