#include "legdga/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace legdga {

Word Word::operator*(const Word& rhs) const {
    std::vector<GenIndex> f;
    f.reserve(factors_.size() + rhs.factors_.size());
    f.insert(f.end(), factors_.begin(), factors_.end());
    f.insert(f.end(), rhs.factors_.begin(), rhs.factors_.end());
    return Word(std::move(f));
}

Word Word::reversed() const {
    return Word(std::vector<GenIndex>(factors_.rbegin(), factors_.rend()));
}

std::optional<std::size_t> Word::find(const Word& needle, std::size_t from) const {
    const std::size_t n = needle.length();
    if (n == 0 || n > factors_.size()) return std::nullopt;
    for (std::size_t i = from; i + n <= factors_.size(); ++i) {
        if (std::equal(needle.factors_.begin(), needle.factors_.end(), factors_.begin() + i))
            return i;
    }
    return std::nullopt;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<GenIndex>(factors_.begin() + pos, factors_.begin() + pos + len));
}

Word Word::replaced(std::size_t pos, std::size_t len, const Word& with) const {
    std::vector<GenIndex> f;
    f.reserve(factors_.size() - len + with.length());
    f.insert(f.end(), factors_.begin(), factors_.begin() + pos);
    f.insert(f.end(), with.factors_.begin(), with.factors_.end());
    f.insert(f.end(), factors_.begin() + pos + len, factors_.end());
    return Word(std::move(f));
}

Algebra::Algebra(std::vector<GeneratorSymbol> generators, int grading_modulus,
                 std::size_t word_length_cap)
    : generators_(std::move(generators)),
      grading_modulus_(grading_modulus),
      word_length_cap_(word_length_cap) {
    if (grading_modulus_ < 0) throw Error("grading modulus must be non-negative");
    if (word_length_cap_ == 0) throw Error("word length cap must be positive");
    for (GenIndex i = 0; i < generators_.size(); ++i) {
        const auto& name = generators_[i].name;
        if (name.empty()) throw Error("generator names must be non-empty");
        if (!index_.emplace(name, i).second)
            throw Error("duplicate generator '" + name + "'");
    }
}

AlgebraPtr Algebra::make(std::vector<GeneratorSymbol> generators, int grading_modulus,
                         std::size_t word_length_cap) {
    return std::make_shared<const Algebra>(std::move(generators), grading_modulus,
                                           word_length_cap);
}

const GeneratorSymbol& Algebra::generator(GenIndex i) const {
    if (i >= generators_.size()) throw Error("generator index out of range");
    return generators_[i];
}

std::optional<GenIndex> Algebra::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

GenIndex Algebra::index_of(std::string_view name) const {
    auto idx = find(name);
    if (!idx) throw UnknownGeneratorError(std::string(name));
    return *idx;
}

int Algebra::reduce_degree(long long degree) const {
    if (grading_modulus_ == 0) return static_cast<int>(degree);
    long long r = degree % grading_modulus_;
    if (r < 0) r += grading_modulus_;
    return static_cast<int>(r);
}

bool Algebra::degrees_equal(long long a, long long b) const {
    return reduce_degree(a) == reduce_degree(b);
}

int Algebra::degree_of(GenIndex i) const { return reduce_degree(generator(i).degree); }

int Algebra::degree_of(const Word& w) const {
    long long sum = 0;
    for (GenIndex g : w.factors()) sum += generator(g).degree;
    return reduce_degree(sum);
}

bool Algebra::word_less(const Word& a, const Word& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    if (a.length() != b.length()) return a.length() < b.length();
    return a.factors() < b.factors();
}

std::string Algebra::to_string(const Word& w) const {
    if (w.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i > 0) out += ' ';
        out += generator(w[i]).name;
    }
    return out;
}

bool Algebra::operator==(const Algebra& other) const {
    return grading_modulus_ == other.grading_modulus_ && generators_ == other.generators_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

void check_factors(const Algebra& alg, const Word& w) {
    for (GenIndex g : w.factors())
        if (g >= alg.size()) throw Error("word references a generator index out of range");
}

// Sort canonically and cancel equal words in pairs (GF(2)).
std::vector<Word> normalize_terms(const Algebra& alg, std::vector<Word> words) {
    std::sort(words.begin(), words.end(),
              [&](const Word& a, const Word& b) { return alg.word_less(a, b); });
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(std::move(words[i]));
        i = j;
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    if (!algebra_) throw Error("polynomial requires an ambient algebra");
}

Polynomial Polynomial::unit(AlgebraPtr algebra) {
    return from_word(std::move(algebra), Word());
}

Polynomial Polynomial::from_word(AlgebraPtr algebra, Word w) {
    Polynomial p(std::move(algebra));
    check_factors(*p.algebra_, w);
    p.terms_.push_back(std::move(w));
    return p;
}

Polynomial Polynomial::from_words(AlgebraPtr algebra, std::vector<Word> words) {
    Polynomial p(std::move(algebra));
    for (const Word& w : words) check_factors(*p.algebra_, w);
    p.terms_ = normalize_terms(*p.algebra_, std::move(words));
    return p;
}

Polynomial Polynomial::generator(const AlgebraPtr& algebra, std::string_view name) {
    if (!algebra) throw Error("polynomial requires an ambient algebra");
    return from_word(algebra, Word::single(algebra->index_of(name)));
}

bool Polynomial::contains(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [&](const Word& a, const Word& b) {
                                   return algebra_->word_less(a, b);
                               });
    return it != terms_.end() && *it == w;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (!same_algebra(algebra_, rhs.algebra_)) throw AlgebraMismatchError();
    std::vector<Word> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i] == rhs.terms_[j]) {
            ++i, ++j;  // cancellation over GF(2)
        } else if (algebra_->word_less(terms_[i], rhs.terms_[j])) {
            merged.push_back(std::move(terms_[i++]));
        } else {
            merged.push_back(rhs.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
    for (; j < rhs.terms_.size(); ++j) merged.push_back(rhs.terms_[j]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (!same_algebra(algebra_, rhs.algebra_)) throw AlgebraMismatchError();
    const std::size_t cap = algebra_->word_length_cap();
    std::vector<Word> products;
    products.reserve(terms_.size() * rhs.terms_.size());
    for (const Word& u : terms_) {
        for (const Word& v : rhs.terms_) {
            if (u.length() + v.length() > cap) throw WordCapError(cap);
            products.push_back(u * v);
        }
    }
    return from_words(algebra_, std::move(products));
}

Polynomial Polynomial::reversed() const {
    std::vector<Word> words;
    words.reserve(terms_.size());
    for (const Word& w : terms_) words.push_back(w.reversed());
    return from_words(algebra_, std::move(words));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return same_algebra(algebra_, rhs.algebra_) && terms_ == rhs.terms_;
}

HomogeneityReport homogeneity(const Polynomial& p) {
    if (p.is_zero()) return {Homogeneity::zero, 0};
    const Algebra& alg = *p.algebra();
    // Terms are sorted by degree first, so the extremes decide.
    const int lo = alg.degree_of(p.terms().front());
    const int hi = alg.degree_of(p.terms().back());
    if (lo != hi) return {Homogeneity::mixed, 0};
    return {Homogeneity::homogeneous, lo};
}

bool is_homogeneous_of(const Polynomial& p, long long degree) {
    const auto h = homogeneity(p);
    if (h.kind == Homogeneity::zero) return true;
    if (h.kind == Homogeneity::mixed) return false;
    return p.algebra()->degrees_equal(h.degree, degree);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Algebra& alg = *p.algebra();
    std::string out;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        if (i > 0) out += " + ";
        out += alg.to_string(p.terms()[i]);
    }
    return out;
}

Polynomial substitute(const Polynomial& p, GenIndex target, const Polynomial& image) {
    if (!same_algebra(p.algebra(), image.algebra())) throw AlgebraMismatchError();
    Polynomial out(p.algebra());
    for (const Word& w : p.terms()) {
        Polynomial acc = Polynomial::unit(p.algebra());
        for (GenIndex g : w.factors()) {
            acc = acc * (g == target ? image : Polynomial::from_word(p.algebra(), Word::single(g)));
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

namespace {

std::vector<std::string> split_whitespace(std::string_view chunk) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < chunk.size()) {
        while (i < chunk.size() && std::isspace(static_cast<unsigned char>(chunk[i]))) ++i;
        std::size_t start = i;
        while (i < chunk.size() && !std::isspace(static_cast<unsigned char>(chunk[i]))) ++i;
        if (i > start) tokens.emplace_back(chunk.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Polynomial parse_polynomial(const AlgebraPtr& algebra, std::string_view text) {
    if (!algebra) throw Error("polynomial requires an ambient algebra");
    if (split_whitespace(text).empty()) throw ParseError("empty polynomial expression");

    std::vector<Word> words;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '+') continue;
        const auto tokens = split_whitespace(text.substr(start, i - start));
        start = i + 1;
        if (tokens.empty()) throw ParseError("empty term in polynomial expression");
        if (tokens.size() == 1 && tokens[0] == "0") continue;  // the zero polynomial
        std::vector<GenIndex> factors;
        for (const auto& tok : tokens) {
            if (tok == "1") continue;  // unit factor
            if (tok == "0") throw ParseError("'0' cannot appear inside a product");
            auto idx = algebra->find(tok);
            if (!idx) throw ParseError("unknown generator '" + tok + "'");
            factors.push_back(*idx);
        }
        words.push_back(Word(std::move(factors)));
    }
    return Polynomial::from_words(algebra, std::move(words));
}

}  // namespace legdga
