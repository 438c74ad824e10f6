#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "legdga/algebra.hpp"
#include "legdga/dga.hpp"
#include "legdga/projection.hpp"

namespace legdga {

/// An oriented, grading-compatible rule: replace the word `lhs` by the
/// polynomial `rhs` wherever `lhs` occurs as a factor.
struct RewriteRule {
    Word lhs;
    Polynomial rhs;
};

/// An ordered list of rules used to compute normal forms in the quotient by
/// the two-sided ideal the rules present. `max_steps` bounds every
/// normal-form computation; exceeding it raises BudgetError rather than
/// returning a truncated answer.
class RewriteSystem {
public:
    static constexpr long kDefaultMaxSteps = 10000;

    RewriteSystem(AlgebraPtr algebra, std::vector<RewriteRule> rules,
                  long max_steps = kDefaultMaxSteps);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    long max_steps() const { return max_steps_; }

private:
    AlgebraPtr algebra_;
    std::vector<RewriteRule> rules_;
    long max_steps_ = kDefaultMaxSteps;
};

/// One reduction step: the first rule (rule order, then leftmost position,
/// then term order) whose lhs occurs in some term is applied once. Returns
/// nothing when the polynomial is irreducible.
std::optional<Polynomial> reduce_once(const RewriteSystem& sys, const Polynomial& p);

/// Iterates reduce_once to a fixed point.
Polynomial normal_form(const RewriteSystem& sys, const Polynomial& p);

bool is_normal_form_word(const RewriteSystem& sys, const Word& w);

/// Orients a relation polynomial into a rule: the leading word (longest,
/// ties broken by the canonical term order) rewrites to the rest.
RewriteRule orient_relation(const AlgebraPtr& algebra, const Polynomial& relation);
RewriteSystem orient_relations(const AlgebraPtr& algebra, std::span<const Polynomial> relations,
                               long max_steps = RewriteSystem::kDefaultMaxSteps);

struct ConfluenceReport {
    bool confluent = true;
    std::size_t critical_pairs = 0;   ///< superpositions examined
    std::size_t words_checked = 0;    ///< brute-force words examined
    std::vector<std::string> divergences;
};

/// Joins every critical pair (overlaps and containments of rule lhs words)
/// and additionally brute-forces uniqueness of normal forms on all words up
/// to `max_word_len`.
ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t max_word_len);

/// All irreducible words of the given degree with length <= max_len, in
/// canonical order.
std::vector<Word> normal_words_of_degree(const RewriteSystem& sys, long long degree,
                                         std::size_t max_len);

/// Deduplicated nonzero images {pi(d(g))} over all generators, in generator
/// order: a generating set for the projected boundary ideal.
std::vector<Polynomial> ideal_images(const ProjectionMap& pi, const ChekanovDGA& dga);

/// Enumerates words over the algebra in length-then-lex order, shortest
/// first, starting with the empty word. Guarded by an internal budget.
void for_each_word(const Algebra& alg, std::size_t max_len,
                   const std::function<void(const Word&)>& fn);

}  // namespace legdga
