#include "legdga/rewrite.hpp"

#include <algorithm>
#include <set>

namespace legdga {

namespace {

constexpr std::size_t kWordEnumerationBudget = 4'000'000;

Polynomial splice(const AlgebraPtr& alg, const Word& host, std::size_t pos, std::size_t len,
                  const Polynomial& replacement) {
    const Polynomial prefix = Polynomial::from_word(alg, host.subword(0, pos));
    const Polynomial suffix =
        Polynomial::from_word(alg, host.subword(pos + len, host.length() - pos - len));
    return prefix * replacement * suffix;
}

}  // namespace

RewriteSystem::RewriteSystem(AlgebraPtr algebra, std::vector<RewriteRule> rules, long max_steps)
    : algebra_(std::move(algebra)), rules_(std::move(rules)), max_steps_(max_steps) {
    if (!algebra_) throw Error("rewrite system requires an ambient algebra");
    if (max_steps_ <= 0) throw Error("rewrite step budget must be positive");
    std::set<std::vector<GenIndex>> seen;
    for (const RewriteRule& rule : rules_) {
        if (rule.lhs.is_unit()) throw Error("rewrite rule with empty left-hand side");
        for (GenIndex g : rule.lhs.factors())
            if (g >= algebra_->size())
                throw Error("rule lhs references a generator index out of range");
        if (!same_algebra(rule.rhs.algebra(), algebra_)) throw AlgebraMismatchError();
        if (!seen.insert(rule.lhs.factors()).second)
            throw Error("duplicate rule left-hand side '" + algebra_->to_string(rule.lhs) + "'");
        if (!is_homogeneous_of(rule.rhs, algebra_->degree_of(rule.lhs)))
            throw Error("rule '" + algebra_->to_string(rule.lhs) + " -> " + to_string(rule.rhs) +
                        "' is not grading-compatible");
    }
}

std::optional<Polynomial> reduce_once(const RewriteSystem& sys, const Polynomial& p) {
    if (!same_algebra(p.algebra(), sys.algebra())) throw AlgebraMismatchError();
    for (const RewriteRule& rule : sys.rules()) {
        std::optional<std::pair<std::size_t, std::size_t>> best;  // (position, term index)
        for (std::size_t t = 0; t < p.terms().size(); ++t) {
            const auto pos = p.terms()[t].find(rule.lhs);
            if (!pos) continue;
            const std::pair<std::size_t, std::size_t> candidate{*pos, t};
            if (!best || candidate < *best) best = candidate;
        }
        if (!best) continue;
        const Word& host = p.terms()[best->second];
        Polynomial out = p;
        out += Polynomial::from_word(p.algebra(), host);  // remove the rewritten term
        out += splice(p.algebra(), host, best->first, rule.lhs.length(), rule.rhs);
        return out;
    }
    return std::nullopt;
}

Polynomial normal_form(const RewriteSystem& sys, const Polynomial& p) {
    Polynomial current = p;
    long steps = 0;
    while (auto next = reduce_once(sys, current)) {
        if (++steps > sys.max_steps())
            throw BudgetError("normal form exceeded " + std::to_string(sys.max_steps()) +
                              " rewrite steps; the system may not terminate");
        current = std::move(*next);
    }
    return current;
}

bool is_normal_form_word(const RewriteSystem& sys, const Word& w) {
    for (const RewriteRule& rule : sys.rules())
        if (w.find(rule.lhs)) return false;
    return true;
}

RewriteRule orient_relation(const AlgebraPtr& algebra, const Polynomial& relation) {
    if (!same_algebra(relation.algebra(), algebra)) throw AlgebraMismatchError();
    if (relation.is_zero()) throw Error("cannot orient the zero relation");
    if (homogeneity(relation).kind == Homogeneity::mixed)
        throw Error("relation '" + to_string(relation) + "' is not homogeneous");
    const Word* leading = &relation.terms().front();
    for (const Word& w : relation.terms()) {
        if (w.length() > leading->length() ||
            (w.length() == leading->length() && algebra->word_less(*leading, w)))
            leading = &w;
    }
    if (leading->is_unit())
        throw Error("relation '" + to_string(relation) +
                    "' has the unit as leading word; the ideal contains 1");
    const Polynomial rest = relation + Polynomial::from_word(algebra, *leading);
    return RewriteRule{*leading, rest};
}

RewriteSystem orient_relations(const AlgebraPtr& algebra, std::span<const Polynomial> relations,
                               long max_steps) {
    std::vector<RewriteRule> rules;
    rules.reserve(relations.size());
    for (const Polynomial& rel : relations) rules.push_back(orient_relation(algebra, rel));
    return RewriteSystem(algebra, std::move(rules), max_steps);
}

void for_each_word(const Algebra& alg, std::size_t max_len,
                   const std::function<void(const Word&)>& fn) {
    std::size_t emitted = 0;
    fn(Word());
    if (alg.size() == 0) return;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<GenIndex> odometer(len, 0);
        while (true) {
            if (++emitted > kWordEnumerationBudget)
                throw BudgetError("word enumeration budget exceeded");
            fn(Word(std::vector<GenIndex>(odometer)));
            std::size_t i = len;
            while (i > 0) {
                if (++odometer[i - 1] < alg.size()) break;
                odometer[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
}

ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t max_word_len) {
    ConfluenceReport report;
    const AlgebraPtr& alg = sys.algebra();
    const auto& rules = sys.rules();

    auto join = [&](const Polynomial& a, const Polynomial& b, const std::string& label) {
        ++report.critical_pairs;
        if (normal_form(sys, a) != normal_form(sys, b)) {
            report.confluent = false;
            report.divergences.push_back(label + ": " + to_string(normal_form(sys, a)) +
                                         " vs " + to_string(normal_form(sys, b)));
        }
    };

    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& li = rules[i].lhs;
            const Word& lj = rules[j].lhs;
            // Proper suffix of lhs_i equal to a proper prefix of lhs_j.
            const std::size_t max_overlap = std::min(li.length(), lj.length()) - 1;
            for (std::size_t o = 1; o <= max_overlap; ++o) {
                if (li.subword(li.length() - o, o) != lj.subword(0, o)) continue;
                const Word tail = lj.subword(o, lj.length() - o);
                const Word head = li.subword(0, li.length() - o);
                const Polynomial via_i = rules[i].rhs * Polynomial::from_word(alg, tail);
                const Polynomial via_j = Polynomial::from_word(alg, head) * rules[j].rhs;
                join(via_i, via_j,
                     "overlap of '" + alg->to_string(li) + "' and '" + alg->to_string(lj) + "'");
            }
            // lhs_j properly contained in lhs_i.
            if (i != j && lj.length() < li.length()) {
                std::size_t from = 0;
                while (auto pos = li.find(lj, from)) {
                    const Polynomial via_j = splice(alg, li, *pos, lj.length(), rules[j].rhs);
                    join(rules[i].rhs, via_j,
                         "'" + alg->to_string(lj) + "' inside '" + alg->to_string(li) + "'");
                    from = *pos + 1;
                }
            }
        }
    }

    for_each_word(*alg, max_word_len, [&](const Word& w) {
        ++report.words_checked;
        const Polynomial start = Polynomial::from_word(alg, w);
        const Polynomial expected = normal_form(sys, start);
        for (const RewriteRule& rule : rules) {
            std::size_t from = 0;
            while (auto pos = w.find(rule.lhs, from)) {
                const Polynomial step = splice(alg, w, *pos, rule.lhs.length(), rule.rhs);
                if (normal_form(sys, step) != expected) {
                    report.confluent = false;
                    report.divergences.push_back(
                        "word '" + alg->to_string(w) + "' has distinct normal forms " +
                        to_string(normal_form(sys, step)) + " and " + to_string(expected));
                }
                from = *pos + 1;
            }
        }
    });
    return report;
}

std::vector<Word> normal_words_of_degree(const RewriteSystem& sys, long long degree,
                                         std::size_t max_len) {
    const Algebra& alg = *sys.algebra();
    std::vector<Word> out;
    for_each_word(alg, max_len, [&](const Word& w) {
        if (alg.degrees_equal(alg.degree_of(w), degree) && is_normal_form_word(sys, w))
            out.push_back(w);
    });
    return out;
}

std::vector<Polynomial> ideal_images(const ProjectionMap& pi, const ChekanovDGA& dga) {
    if (!same_algebra(pi.source(), dga.algebra())) throw AlgebraMismatchError();
    std::vector<Polynomial> out;
    for (GenIndex g = 0; g < dga.algebra()->size(); ++g) {
        Polynomial img = project(pi, dga.differential(g));
        if (img.is_zero()) continue;
        if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
    }
    return out;
}

}  // namespace legdga
