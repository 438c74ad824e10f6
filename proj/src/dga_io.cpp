#include "legdga/dga_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace legdga {

namespace {

struct Line {
    std::size_t number = 0;
    std::string text;  // comment-stripped, trimmed
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        ++number;
        std::string_view raw = text.substr(start, i - start);
        start = i + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string stripped = trim(raw);
        if (!stripped.empty()) lines.push_back({number, std::move(stripped)});
    }
    return lines;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& message) {
    std::string where(source);
    if (line > 0) where += ":" + std::to_string(line);
    throw ParseError(where + ": " + message);
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    long long value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        value = value * 10 + (s[i] - '0');
        if (value > 1'000'000'000) return std::nullopt;
    }
    return static_cast<int>(s[0] == '-' ? -value : value);
}

std::vector<std::string> words_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Splits "lhs -> rhs" around the first arrow.
std::optional<std::pair<std::string, std::string>> split_arrow(const std::string& s) {
    const auto pos = s.find("->");
    if (pos == std::string::npos) return std::nullopt;
    return std::make_pair(trim(s.substr(0, pos)), trim(s.substr(pos + 2)));
}

// Parses a `gen name : degree` line already known to start with "gen".
GeneratorSymbol parse_gen_line(std::string_view source, const Line& line) {
    const auto tokens = words_of(line.text);
    // expected: gen <name> : <degree>
    if (tokens.size() != 4 || tokens[2] != ":")
        fail(source, line.number, "expected 'gen <name> : <degree>'");
    if (!is_identifier(tokens[1]))
        fail(source, line.number, "invalid generator name '" + tokens[1] + "'");
    const auto degree = parse_int(tokens[3]);
    if (!degree) fail(source, line.number, "invalid degree '" + tokens[3] + "'");
    return GeneratorSymbol{tokens[1], *degree};
}

}  // namespace

ChekanovDGA parse_dga(std::string_view text, std::string_view source_name) {
    const auto lines = content_lines(text);
    if (lines.empty()) fail(source_name, 0, "empty DGA document");

    std::string name;
    std::optional<std::string> smooth;
    std::optional<int> tb, maslov;
    std::vector<GeneratorSymbol> generators;
    std::vector<std::pair<Line, std::string>> diff_lines;  // line, generator name

    for (const Line& line : lines) {
        std::istringstream in(line.text);
        std::string keyword;
        in >> keyword;
        if (keyword == "dga") {
            if (!name.empty()) fail(source_name, line.number, "duplicate 'dga' line");
            std::string value;
            if (!(in >> value) || !is_identifier(value))
                fail(source_name, line.number, "expected 'dga <name>'");
            name = value;
        } else if (keyword == "smooth") {
            std::string value;
            if (!(in >> value)) fail(source_name, line.number, "expected 'smooth <type>'");
            smooth = value;
        } else if (keyword == "tb") {
            std::string value;
            in >> value;
            const auto parsed = parse_int(value);
            if (!parsed) fail(source_name, line.number, "expected 'tb <integer>'");
            tb = *parsed;
        } else if (keyword == "maslov") {
            std::string value;
            in >> value;
            const auto parsed = parse_int(value);
            if (!parsed) fail(source_name, line.number, "expected 'maslov <integer>'");
            maslov = *parsed;
        } else if (keyword == "gen") {
            generators.push_back(parse_gen_line(source_name, line));
        } else if (keyword == "d") {
            std::string gen;
            if (!(in >> gen)) fail(source_name, line.number, "expected 'd <generator> = <poly>'");
            std::string eq;
            if (!(in >> eq) || eq != "=")
                fail(source_name, line.number, "expected '=' in differential line");
            diff_lines.push_back({line, gen});
        } else {
            fail(source_name, line.number, "unknown directive '" + keyword + "'");
        }
    }

    if (name.empty()) fail(source_name, 0, "missing 'dga <name>' line");

    AlgebraPtr algebra;
    try {
        algebra = Algebra::make(generators, 2 * std::abs(maslov.value_or(0)));
    } catch (const Error& e) {
        fail(source_name, 0, e.what());
    }

    std::vector<std::optional<Polynomial>> diffs(algebra->size());
    for (const auto& [line, gen] : diff_lines) {
        const auto idx = algebra->find(gen);
        if (!idx) fail(source_name, line.number, "unknown generator '" + gen + "'");
        if (diffs[*idx]) fail(source_name, line.number, "duplicate differential for '" + gen + "'");
        const auto pos = line.text.find('=');
        try {
            diffs[*idx] = parse_polynomial(algebra, line.text.substr(pos + 1));
        } catch (const ParseError& e) {
            fail(source_name, line.number, e.what());
        }
    }
    for (GenIndex g = 0; g < algebra->size(); ++g)
        if (!diffs[g])
            fail(source_name, 0, "missing differential for '" + algebra->generator(g).name + "'");

    std::vector<Polynomial> differentials;
    differentials.reserve(algebra->size());
    for (auto& d : diffs) differentials.push_back(std::move(*d));

    KnotMetadata metadata;
    metadata.display_name = name;
    metadata.smooth_type = smooth.value_or("");
    metadata.thurston_bennequin = tb.value_or(0);
    metadata.maslov_number = maslov.value_or(0);
    return ChekanovDGA(std::move(algebra), std::move(differentials), std::move(metadata));
}

std::string format_dga(const ChekanovDGA& dga) {
    const Algebra& alg = *dga.algebra();
    std::ostringstream out;
    const auto& meta = dga.metadata();
    out << "dga " << (meta && !meta->display_name.empty() ? meta->display_name : "unnamed")
        << "\n";
    if (meta) {
        if (!meta->smooth_type.empty()) out << "smooth " << meta->smooth_type << "\n";
        out << "tb " << meta->thurston_bennequin << "\n";
        out << "maslov " << meta->maslov_number << "\n";
    }
    for (GenIndex g = 0; g < alg.size(); ++g)
        out << "gen " << alg.generator(g).name << " : " << alg.generator(g).degree << "\n";
    for (GenIndex g = 0; g < alg.size(); ++g)
        out << "d " << alg.generator(g).name << " = " << to_string(dga.differential(g)) << "\n";
    return out.str();
}

ProjectionRecipe parse_projection_recipe(std::string_view text, const AlgebraPtr& source,
                                         std::string_view source_name) {
    if (!source) throw Error("projection recipe requires a source algebra");
    const auto lines = content_lines(text);

    std::vector<GeneratorSymbol> target_gens;
    for (const Line& line : lines) {
        const auto tokens = words_of(line.text);
        if (!tokens.empty() && tokens.front() == "gen")
            target_gens.push_back(parse_gen_line(source_name, line));
    }
    AlgebraPtr target;
    try {
        target = Algebra::make(target_gens, source->grading_modulus(), source->word_length_cap());
    } catch (const Error& e) {
        fail(source_name, 0, e.what());
    }

    std::vector<ElementaryAutomorphism> substitutions;
    std::vector<std::optional<Polynomial>> images(source->size());
    bool default_zero = false;

    for (const Line& line : lines) {
        std::istringstream in(line.text);
        std::string keyword;
        in >> keyword;
        if (keyword == "gen") continue;
        std::string rest;
        std::getline(in, rest);
        if (keyword == "subst") {
            const auto parts = split_arrow(rest);
            if (!parts || !is_identifier(parts->first))
                fail(source_name, line.number, "expected 'subst <generator> -> <polynomial>'");
            const auto idx = source->find(parts->first);
            if (!idx) fail(source_name, line.number, "unknown generator '" + parts->first + "'");
            Polynomial image(source);
            try {
                image = parse_polynomial(source, parts->second);
            } catch (const ParseError& e) {
                fail(source_name, line.number, e.what());
            }
            const Word gen_word = Word::single(*idx);
            if (!image.contains(gen_word))
                fail(source_name, line.number,
                     "substitution image must have the form " + parts->first + " + shift");
            substitutions.push_back(
                {parts->first, image + Polynomial::from_word(source, gen_word)});
        } else if (keyword == "map") {
            const auto parts = split_arrow(rest);
            if (!parts || !is_identifier(parts->first))
                fail(source_name, line.number, "expected 'map <generator> -> <polynomial>'");
            const auto idx = source->find(parts->first);
            if (!idx) fail(source_name, line.number, "unknown generator '" + parts->first + "'");
            if (images[*idx])
                fail(source_name, line.number, "duplicate image for '" + parts->first + "'");
            try {
                images[*idx] = parse_polynomial(target, parts->second);
            } catch (const ParseError& e) {
                fail(source_name, line.number, e.what());
            }
        } else if (keyword == "default") {
            const auto parts = split_arrow(line.text);
            if (!parts || parts->first != "default" || parts->second != "0")
                fail(source_name, line.number, "the only supported default is 'default -> 0'");
            default_zero = true;
        } else {
            fail(source_name, line.number, "unknown directive '" + keyword + "'");
        }
    }

    std::vector<Polynomial> final_images;
    final_images.reserve(source->size());
    for (GenIndex g = 0; g < source->size(); ++g) {
        if (images[g]) {
            final_images.push_back(std::move(*images[g]));
        } else if (default_zero) {
            final_images.push_back(Polynomial::zero(target));
        } else {
            fail(source_name, 0,
                 "no image for generator '" + source->generator(g).name +
                     "' (add an explicit 'default -> 0' line)");
        }
    }

    try {
        return ProjectionRecipe{std::move(substitutions),
                                ProjectionMap(source, target, std::move(final_images))};
    } catch (const Error& e) {
        fail(source_name, 0, e.what());
    }
}

RewriteSystem parse_rules(std::string_view text, std::string_view source_name) {
    const auto lines = content_lines(text);

    std::vector<GeneratorSymbol> gens;
    for (const Line& line : lines) {
        const auto tokens = words_of(line.text);
        if (!tokens.empty() && tokens.front() == "gen")
            gens.push_back(parse_gen_line(source_name, line));
    }
    AlgebraPtr algebra;
    try {
        algebra = Algebra::make(gens);
    } catch (const Error& e) {
        fail(source_name, 0, e.what());
    }

    std::vector<RewriteRule> rules;
    for (const Line& line : lines) {
        std::istringstream in(line.text);
        std::string keyword;
        in >> keyword;
        std::string rest;
        std::getline(in, rest);
        if (keyword == "gen") continue;
        if (keyword == "rule:") {
            const auto parts = split_arrow(rest);
            if (!parts) fail(source_name, line.number, "expected 'rule: <word> -> <polynomial>'");
            std::vector<GenIndex> factors;
            for (const auto& tok : words_of(parts->first)) {
                const auto idx = algebra->find(tok);
                if (!idx) fail(source_name, line.number, "unknown generator '" + tok + "'");
                factors.push_back(*idx);
            }
            if (factors.empty())
                fail(source_name, line.number, "rule left-hand side must be a nonempty word");
            try {
                rules.push_back(
                    {Word(std::move(factors)), parse_polynomial(algebra, parts->second)});
            } catch (const ParseError& e) {
                fail(source_name, line.number, e.what());
            }
        } else if (keyword == "rel:") {
            try {
                rules.push_back(orient_relation(algebra, parse_polynomial(algebra, rest)));
            } catch (const Error& e) {
                fail(source_name, line.number, e.what());
            }
        } else {
            fail(source_name, line.number, "unknown directive '" + keyword + "'");
        }
    }

    try {
        return RewriteSystem(algebra, std::move(rules));
    } catch (const Error& e) {
        fail(source_name, 0, e.what());
    }
}

}  // namespace legdga
