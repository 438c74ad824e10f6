#pragma once

// A deliberately naive rewriting engine, independent of legdga::RewriteSystem,
// used as an oracle: it represents polynomials as plain sets of index vectors
// and explores every reduction order.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using OWord = std::vector<int>;
using OPoly = std::set<OWord>;

inline OPoly oxor(OPoly a, const OPoly& b) {
    for (const OWord& w : b) {
        auto [it, inserted] = a.insert(w);
        if (!inserted) a.erase(it);
    }
    return a;
}

struct ORule {
    OWord lhs;
    OPoly rhs;
};

inline OPoly apply_at(const OPoly& p, const OWord& term, std::size_t pos, const ORule& rule) {
    OPoly replacement;
    for (const OWord& r : rule.rhs) {
        OWord w(term.begin(), term.begin() + pos);
        w.insert(w.end(), r.begin(), r.end());
        w.insert(w.end(), term.begin() + pos + rule.lhs.size(), term.end());
        replacement = oxor(std::move(replacement), {w});
    }
    OPoly out = oxor(p, {term});
    return oxor(std::move(out), replacement);
}

// Every one-step reduct of p, over all rules, terms, and positions.
inline std::vector<OPoly> one_step_reducts(const std::vector<ORule>& rules, const OPoly& p) {
    std::vector<OPoly> out;
    for (const OWord& term : p) {
        for (const ORule& rule : rules) {
            if (rule.lhs.empty() || rule.lhs.size() > term.size()) continue;
            for (std::size_t pos = 0; pos + rule.lhs.size() <= term.size(); ++pos) {
                bool match = true;
                for (std::size_t i = 0; i < rule.lhs.size(); ++i)
                    if (term[pos + i] != rule.lhs[i]) match = false;
                if (match) out.push_back(apply_at(p, term, pos, rule));
            }
        }
    }
    return out;
}

// The set of all irreducible polynomials reachable from p along any
// reduction sequence. Memoized; throws if the exploration explodes.
inline std::set<OPoly> all_normal_forms(const std::vector<ORule>& rules, const OPoly& p,
                                        std::map<OPoly, std::set<OPoly>>& memo,
                                        std::size_t guard = 200000) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    if (memo.size() > guard) throw std::runtime_error("oracle exploration too large");
    const auto reducts = one_step_reducts(rules, p);
    std::set<OPoly> result;
    if (reducts.empty()) {
        result.insert(p);
    } else {
        for (const OPoly& r : reducts) {
            const auto sub = all_normal_forms(rules, r, memo, guard);
            result.insert(sub.begin(), sub.end());
        }
    }
    memo[p] = result;
    return result;
}

// All words over {0, ..., letters-1} of length <= max_len, unit included.
inline std::vector<OWord> all_words(int letters, std::size_t max_len) {
    std::vector<OWord> out{{}};
    std::size_t start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = start; i < end; ++i)
            for (int c = 0; c < letters; ++c) {
                OWord w = out[i];
                w.push_back(c);
                out.push_back(std::move(w));
            }
        start = end;
    }
    return out;
}

}  // namespace oracle
