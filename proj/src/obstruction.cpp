#include "legdga/obstruction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace legdga {

namespace {

struct PolynomialLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        return a.terms() < b.terms();
    }
};

// Lazily generated words of one fixed degree, shortest first, with their
// boundaries cached. Generation is charged against the shared search budget.
class CandidateStream {
public:
    CandidateStream(const ChekanovDGA& dga, long long degree, std::size_t max_len,
                    long long& budget)
        : dga_(dga), degree_(degree), max_len_(max_len), budget_(&budget) {}

    const Word* word(std::size_t i) {
        while (i >= words_.size() && !exhausted_) advance();
        return i < words_.size() ? &words_[i] : nullptr;
    }

    const Polynomial& boundary(std::size_t i) { return boundaries_[i]; }

private:
    void advance() {
        const Algebra& alg = *dga_.algebra();
        while (!exhausted_) {
            if (odometer_.empty() || step_odometer()) {
                if (current_len_ >= max_len_ || alg.size() == 0) {
                    exhausted_ = true;
                    return;
                }
                odometer_.assign(++current_len_, 0);
            }
            if (--*budget_ < 0) throw BudgetError("witness search budget exceeded");
            Word w{std::vector<GenIndex>(odometer_)};
            if (!alg.degrees_equal(alg.degree_of(w), degree_)) continue;
            boundaries_.push_back(apply_differential(dga_, w));
            words_.push_back(std::move(w));
            return;
        }
    }

    // Returns true when the current length is exhausted.
    bool step_odometer() {
        const std::size_t n = dga_.algebra()->size();
        std::size_t i = odometer_.size();
        while (i > 0) {
            if (++odometer_[i - 1] < n) return false;
            odometer_[i - 1] = 0;
            --i;
        }
        return true;
    }

    const ChekanovDGA& dga_;
    long long degree_;
    std::size_t max_len_;
    long long* budget_;
    bool exhausted_ = false;
    std::size_t current_len_ = 0;
    std::vector<GenIndex> odometer_;
    std::vector<Word> words_;
    std::vector<Polynomial> boundaries_;
};

// Enumerates size-k index subsets of the stream in lexicographic order,
// keeping only those whose summed boundary vanishes (cycles). Returns true
// as soon as fn does.
bool for_each_cycle(CandidateStream& stream, std::size_t k, const AlgebraPtr& alg,
                    const std::function<bool(const Polynomial&)>& fn) {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, const Polynomial&)> rec =
        [&](std::size_t start, const Polynomial& boundary_sum) -> bool {
        for (std::size_t i = start; stream.word(i) != nullptr; ++i) {
            Polynomial acc = boundary_sum + stream.boundary(i);
            chosen.push_back(i);
            if (chosen.size() == k) {
                if (acc.is_zero()) {
                    std::vector<Word> words;
                    words.reserve(k);
                    for (std::size_t idx : chosen) words.push_back(*stream.word(idx));
                    if (fn(Polynomial::from_words(alg, std::move(words)))) {
                        chosen.pop_back();
                        return true;
                    }
                }
            } else if (rec(i + 1, acc)) {
                chosen.pop_back();
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    return rec(0, Polynomial::zero(alg));
}

std::string degree_pair(int p, int q) {
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
}

std::string h_product(int p, int q) {
    return "H_" + std::to_string(p) + " * H_" + std::to_string(q);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

std::string render_words(const Algebra& alg, const std::vector<Word>& words,
                         std::size_t limit = 12) {
    if (words.empty()) return "(none)";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < words.size() && i < limit; ++i)
        parts.push_back(alg.to_string(words[i]));
    std::string out = join(parts, ", ");
    if (words.size() > limit) out += ", ...";
    return out;
}

}  // namespace

Witness reversed(const Witness& w) {
    return Witness{w.y.reversed(), w.x.reversed(), w.z.reversed(), w.q, w.p};
}

WitnessCheck verify_witness(const ChekanovDGA& dga, const Witness& w) {
    const AlgebraPtr& alg = dga.algebra();
    auto fail = [](std::string msg) { return WitnessCheck{false, std::move(msg)}; };

    if (!same_algebra(w.x.algebra(), alg) || !same_algebra(w.y.algebra(), alg) ||
        !same_algebra(w.z.algebra(), alg))
        return fail("witness polynomials live in a different algebra");
    if (!alg->degrees_equal(static_cast<long long>(w.p) + w.q, 0))
        return fail("degrees " + degree_pair(w.p, w.q) + " do not satisfy p + q = 0");
    if (!is_homogeneous_of(w.x, w.p))
        return fail("x is not homogeneous of degree " + std::to_string(w.p));
    if (!is_homogeneous_of(w.y, w.q))
        return fail("y is not homogeneous of degree " + std::to_string(w.q));
    if (!is_homogeneous_of(w.z, static_cast<long long>(w.p) + w.q + 1))
        return fail("z is not homogeneous of degree " +
                    std::to_string(alg->reduce_degree(static_cast<long long>(w.p) + w.q + 1)));
    if (!apply_differential(dga, w.x).is_zero()) return fail("x is not a cycle: d(x) != 0");
    if (!apply_differential(dga, w.y).is_zero()) return fail("y is not a cycle: d(y) != 0");
    const Polynomial lhs = Polynomial::unit(alg) + w.x * w.y;
    if (lhs != apply_differential(dga, w.z)) return fail("1 + x y != d(z)");
    return WitnessCheck{true, "ok"};
}

std::optional<Witness> search_witness(const ChekanovDGA& dga, int p, int q, std::size_t max_len,
                                      const SearchOptions& options) {
    if (max_len == 0) throw Error("witness search needs max_len >= 1");
    if (options.max_terms == 0 || options.max_z_generators == 0)
        throw Error("witness search needs positive term limits");
    const AlgebraPtr& alg = dga.algebra();
    if (!alg->degrees_equal(static_cast<long long>(p) + q, 0)) return std::nullopt;

    // All z candidates: sums of up to max_z_generators generators of degree
    // p + q + 1, keyed by their boundary. First z per boundary wins.
    std::vector<GenIndex> z_gens;
    for (GenIndex g = 0; g < alg->size(); ++g)
        if (alg->degrees_equal(alg->generator(g).degree, static_cast<long long>(p) + q + 1))
            z_gens.push_back(g);
    if (z_gens.empty()) return std::nullopt;

    std::map<Polynomial, Polynomial, PolynomialLess> boundary_to_z;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> combos = [&](std::size_t start,
                                                               std::size_t remaining) {
        if (remaining == 0) {
            Polynomial z(alg), dz(alg);
            for (std::size_t idx : chosen) {
                z += Polynomial::from_word(alg, Word::single(z_gens[idx]));
                dz += dga.differential(z_gens[idx]);
            }
            boundary_to_z.emplace(std::move(dz), std::move(z));
            return;
        }
        for (std::size_t i = start; i < z_gens.size(); ++i) {
            chosen.push_back(i);
            combos(i + 1, remaining - 1);
            chosen.pop_back();
        }
    };
    for (std::size_t k = 1; k <= options.max_z_generators; ++k) combos(0, k);

    long long budget = options.budget;
    CandidateStream xs(dga, p, max_len, budget);
    CandidateStream ys(dga, q, max_len, budget);

    std::optional<Witness> found;
    for (std::size_t kx = 1; kx <= options.max_terms && !found; ++kx) {
        for_each_cycle(xs, kx, alg, [&](const Polynomial& x) {
            for (std::size_t ky = 1; ky <= options.max_terms && !found; ++ky) {
                for_each_cycle(ys, ky, alg, [&](const Polynomial& y) {
                    if (--budget < 0) throw BudgetError("witness search budget exceeded");
                    const Polynomial key = Polynomial::unit(alg) + x * y;
                    auto it = boundary_to_z.find(key);
                    if (it == boundary_to_z.end()) return false;
                    found = Witness{x, y, it->second, p, q};
                    return true;
                });
            }
            return found.has_value();
        });
    }
    return found;
}

std::string to_string(RefutationStatus status) {
    switch (status) {
        case RefutationStatus::refuted_structural: return "refuted (structural)";
        case RefutationStatus::refuted_bounded: return "refuted (bounded)";
        case RefutationStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

RefutationReport refute_unit_product(const ChekanovDGA& dga, int p, int q,
                                     const ProjectionMap& pi, std::size_t max_len,
                                     const RefuteOptions& options) {
    RefutationReport report;
    report.p = p;
    report.q = q;
    report.max_len = max_len;
    report.target = pi.target();
    const AlgebraPtr& target = pi.target();

    if (!target->degrees_equal(static_cast<long long>(p) + q, 0)) {
        report.status = RefutationStatus::refuted_structural;
        report.reason = "p + q != 0, so every product of degree-" + std::to_string(p) +
                        " and degree-" + std::to_string(q) +
                        " elements has nonzero degree and cannot equal 1";
        return report;
    }

    report.images = ideal_images(pi, dga);
    for (const Polynomial& img : report.images) {
        if (img.is_unit()) {
            report.status = RefutationStatus::inconclusive;
            report.reason = "the projected ideal contains 1, so the quotient is trivial";
            return report;
        }
    }

    const RewriteSystem sys =
        orient_relations(target, report.images, options.max_steps);
    report.rules = sys.rules();
    report.confluence = check_local_confluence(sys, options.confluence_word_len);
    if (!report.confluence.confluent)
        throw Error("rewrite system is not locally confluent; refutation not attempted: " +
                    (report.confluence.divergences.empty() ? std::string("(no detail)")
                                                           : report.confluence.divergences.front()));

    report.left_words = normal_words_of_degree(sys, p, max_len);
    report.right_words = normal_words_of_degree(sys, q, max_len);
    report.enumerated = true;

    for (const Word& u : report.left_words) {
        for (const Word& v : report.right_words) {
            ++report.pairs_checked;
            const Polynomial product =
                Polynomial::from_word(target, u) * Polynomial::from_word(target, v);
            if (normal_form(sys, product).contains_unit()) {
                report.unit_pair = {u, v};
                report.status = RefutationStatus::inconclusive;
                report.reason = "normal form of (" + target->to_string(u) + ")(" +
                                target->to_string(v) + ") contains 1";
                return report;
            }
        }
    }

    // Two generators of degrees +1 and -1 with the single relation
    // 1 + (first)(second): normal words are second^a first^b, and a normal
    // word of degree p = deg(second) forces a = b + 1 >= 1, so every product
    // normal form keeps a positive second-exponent at every length.
    report.status = RefutationStatus::refuted_bounded;
    report.reason = "no product of enumerated normal forms contains 1 (exhaustive up to word length " +
                    std::to_string(max_len) + ")";
    if (target->size() == 2 && target->grading_modulus() == 0 && report.rules.size() == 1) {
        const RewriteRule& rule = report.rules.front();
        if (rule.lhs.length() == 2 && rule.lhs[0] != rule.lhs[1] && rule.rhs.is_unit()) {
            const GenIndex first = rule.lhs[0];
            const GenIndex second = rule.lhs[1];
            const int d_first = target->generator(first).degree;
            const int d_second = target->generator(second).degree;
            const bool degrees_are_unit_pair =
                (d_first == 1 && d_second == -1) || (d_first == -1 && d_second == 1);
            bool pattern_holds = degrees_are_unit_pair && p == d_second;
            if (pattern_holds) {
                for (const Word& w : report.left_words) {
                    std::size_t a = 0;
                    while (a < w.length() && w[a] == second) ++a;
                    const std::size_t b = w.length() - a;
                    for (std::size_t i = a; i < w.length(); ++i)
                        if (w[i] != first) pattern_holds = false;
                    if (a != b + 1) pattern_holds = false;
                }
            }
            if (pattern_holds) {
                const std::string sn = target->generator(second).name;
                const std::string fn = target->generator(first).name;
                report.status = RefutationStatus::refuted_structural;
                report.reason = "every degree " + std::to_string(p) + " normal form is " + sn +
                                "^i " + fn + "^(i-1) with i >= 1, so every product normal form is " +
                                sn + "^s " + fn + "^s with s >= 1; 1 is never attained";
            }
        }
    }
    return report;
}

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::proved_with_witness: return "proved-with-witness";
        case ClaimStatus::refuted_via_projection: return "refuted-via-projection";
        case ClaimStatus::undetermined: return "undetermined";
    }
    return "unknown";
}

UnitProductClaim decide_unit_product(const ChekanovDGA& dga, int p, int q,
                                     const ProjectionRecipe& recipe, std::size_t max_len,
                                     const SearchOptions& search_options,
                                     const RefuteOptions& refute_options) {
    UnitProductClaim claim{dga, p, q, ClaimStatus::undetermined, std::nullopt, std::nullopt};
    if (auto witness = search_witness(dga, p, q, max_len, search_options)) {
        if (verify_witness(dga, *witness).valid) {
            claim.status = ClaimStatus::proved_with_witness;
            claim.witness = std::move(witness);
            return claim;
        }
    }
    const ChekanovDGA substituted = apply_automorphisms(dga, recipe.substitutions);
    claim.refutation =
        refute_unit_product(substituted, p, q, recipe.map, max_len, refute_options);
    if (claim.refutation->refuted()) claim.status = ClaimStatus::refuted_via_projection;
    return claim;
}

std::vector<std::string> recipe_substitution_lines(const ProjectionRecipe& recipe) {
    std::vector<std::string> out;
    for (const ElementaryAutomorphism& phi : recipe.substitutions) {
        const AlgebraPtr& alg = phi.shift.algebra();
        const Polynomial image =
            Polynomial::generator(alg, phi.target) + phi.shift;
        out.push_back(phi.target + " -> " + to_string(image));
    }
    return out;
}

std::vector<std::string> recipe_projection_lines(const ProjectionMap& map) {
    std::vector<std::string> out;
    bool any_zero = false;
    for (GenIndex g = 0; g < map.source()->size(); ++g) {
        const Polynomial& img = map.image(g);
        if (img.is_zero()) {
            any_zero = true;
            continue;
        }
        out.push_back(map.source()->generator(g).name + " -> " + to_string(img));
    }
    if (any_zero) out.push_back("default -> 0");
    return out;
}

std::string format_refutation_section(const RefutationReport& report,
                                      const std::vector<std::string>& substitution_lines,
                                      const std::vector<std::string>& projection_lines) {
    std::ostringstream out;
    for (const auto& line : substitution_lines) out << "substitution: " << line << "\n";
    for (const auto& line : projection_lines) out << "projection: " << line << "\n";
    if (!report.images.empty()) {
        std::vector<std::string> images;
        for (const Polynomial& img : report.images) images.push_back(to_string(img));
        out << "ideal images: " << join(images, "; ") << "\n";
    }
    if (!report.rules.empty()) {
        std::vector<std::string> rules;
        const Algebra& alg = *report.target;
        for (const RewriteRule& rule : report.rules)
            rules.push_back(alg.to_string(rule.lhs) + " -> " + to_string(rule.rhs));
        out << "rewrite rules: " << join(rules, "; ") << "\n";
        out << "confluence: ok (critical pair checks: " << report.confluence.critical_pairs
            << ", words checked: " << report.confluence.words_checked << ")\n";
    }
    if (report.enumerated) {
        out << "degree " << report.p << " normal forms (length <= " << report.max_len
            << "): " << render_words(*report.target, report.left_words) << "\n";
        out << "degree " << report.q << " normal forms (length <= " << report.max_len
            << "): " << render_words(*report.target, report.right_words) << "\n";
        out << "pairs checked: " << report.pairs_checked << "\n";
    }
    out << "status: " << to_string(report.status) << "\n";
    out << "reason: " << report.reason << "\n";
    return out.str();
}

DistinguishReport distinguish(const ChekanovDGA& left, const ChekanovDGA& right, int p, int q,
                              const ProjectionRecipe& recipe, std::size_t max_len,
                              const SearchOptions& search_options,
                              const RefuteOptions& refute_options) {
    DistinguishReport report;
    report.p = p;
    report.q = q;
    report.max_len = max_len;
    report.left_name = left.display_name().empty() ? "left" : left.display_name();
    report.right_name = right.display_name().empty() ? "right" : right.display_name();
    report.left_generators = left.algebra()->size();
    report.right_generators = right.algebra()->size();
    report.search_options = search_options;
    report.substitution_lines = recipe_substitution_lines(recipe);
    report.projection_lines = recipe_projection_lines(recipe.map);

    report.witness = search_witness(left, p, q, max_len, search_options);
    if (report.witness) report.witness_check = verify_witness(left, *report.witness);

    const ChekanovDGA substituted = apply_automorphisms(right, recipe.substitutions);
    report.refutation = refute_unit_product(substituted, p, q, recipe.map, max_len,
                                            refute_options);

    const bool witness_ok = report.witness && report.witness_check && report.witness_check->valid;
    report.verdict = (witness_ok && report.refutation.refuted()) ? Verdict::nonisomorphic
                                                                 : Verdict::undetermined;
    return report;
}

std::string format_certificate(const DistinguishReport& report) {
    std::ostringstream out;
    out << "== distinguish: graded unit-product obstruction ==\n";
    out << "degrees: " << degree_pair(report.p, report.q) << "\n";
    out << "max word length: " << report.max_len << "\n";
    out << "left:  " << report.left_name << " (" << report.left_generators << " generators)\n";
    out << "right: " << report.right_name << " (" << report.right_generators
        << " generators)\n";
    out << "\n";

    out << "-- witness on the left: 1 in " << h_product(report.p, report.q) << " --\n";
    if (report.witness) {
        const Witness& w = *report.witness;
        out << "x = " << to_string(w.x) << "\n";
        out << "y = " << to_string(w.y) << "\n";
        out << "z = " << to_string(w.z) << "\n";
        out << "1 + x y = " << to_string(Polynomial::unit(w.x.algebra()) + w.x * w.y) << "\n";
        std::string check_line = "not checked";
        if (report.witness_check)
            check_line = report.witness_check->valid
                             ? "valid"
                             : "INVALID (" + report.witness_check->diagnostic + ")";
        out << "witness check: " << check_line << "\n";
    } else {
        out << "no witness found (up to " << report.search_options.max_terms
            << " terms per cycle, word length <= " << report.max_len << ")\n";
    }
    out << "\n";

    out << "-- refutation on the right: 1 not in " << h_product(report.p, report.q) << " --\n";
    out << format_refutation_section(report.refutation, report.substitution_lines,
                                     report.projection_lines);
    out << "\n";

    if (report.verdict == Verdict::nonisomorphic)
        out << "== verdict: nonisomorphic graded homology algebras ==\n";
    else
        out << "== verdict: undetermined ==\n";
    return out.str();
}

}  // namespace legdga
