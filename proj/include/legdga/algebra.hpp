#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "legdga/errors.hpp"

namespace legdga {

using GenIndex = std::uint32_t;

/// A named generator together with its (Maslov) degree.
struct GeneratorSymbol {
    std::string name;
    int degree = 0;

    bool operator==(const GeneratorSymbol&) const = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A monomial: an ordered sequence of generator indices. The empty word is
/// the unit of the algebra.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<GenIndex> factors) : factors_(std::move(factors)) {}
    static Word single(GenIndex g) { return Word(std::vector<GenIndex>{g}); }

    bool is_unit() const { return factors_.empty(); }
    std::size_t length() const { return factors_.size(); }
    const std::vector<GenIndex>& factors() const { return factors_; }
    GenIndex operator[](std::size_t i) const { return factors_[i]; }

    /// Concatenation.
    Word operator*(const Word& rhs) const;
    Word reversed() const;

    /// First position >= `from` at which `needle` occurs as a factor.
    std::optional<std::size_t> find(const Word& needle, std::size_t from = 0) const;
    Word subword(std::size_t pos, std::size_t len) const;
    /// Copy with factors [pos, pos+len) replaced by `with`.
    Word replaced(std::size_t pos, std::size_t len, const Word& with) const;

    bool operator==(const Word&) const = default;
    /// Raw index-lexicographic order, used only as an arbitrary total order.
    /// The canonical term order lives on Algebra::word_less.
    std::strong_ordering operator<=>(const Word&) const = default;

private:
    std::vector<GenIndex> factors_;
};

/// Free associative unital graded algebra over GF(2).
///
/// Degrees are plain integers when `grading_modulus` is zero and are compared
/// modulo the modulus otherwise. Multiplication refuses to build words longer
/// than `word_length_cap`.
class Algebra {
public:
    static constexpr std::size_t kDefaultWordCap = 64;

    explicit Algebra(std::vector<GeneratorSymbol> generators, int grading_modulus = 0,
                     std::size_t word_length_cap = kDefaultWordCap);

    static AlgebraPtr make(std::vector<GeneratorSymbol> generators, int grading_modulus = 0,
                           std::size_t word_length_cap = kDefaultWordCap);

    std::size_t size() const { return generators_.size(); }
    const std::vector<GeneratorSymbol>& generators() const { return generators_; }
    const GeneratorSymbol& generator(GenIndex i) const;
    std::optional<GenIndex> find(std::string_view name) const;
    GenIndex index_of(std::string_view name) const;  ///< throws UnknownGeneratorError

    int grading_modulus() const { return grading_modulus_; }
    std::size_t word_length_cap() const { return word_length_cap_; }

    /// Reduce a raw degree into [0, m) when the modulus m is positive.
    int reduce_degree(long long degree) const;
    bool degrees_equal(long long a, long long b) const;
    int degree_of(GenIndex i) const;
    int degree_of(const Word& w) const;

    /// Canonical term order: degree, then word length, then factor indices.
    bool word_less(const Word& a, const Word& b) const;

    std::string to_string(const Word& w) const;

    /// Structural equality: generators and grading modulus.
    bool operator==(const Algebra& other) const;

private:
    std::vector<GeneratorSymbol> generators_;
    std::unordered_map<std::string, GenIndex> index_;
    int grading_modulus_ = 0;
    std::size_t word_length_cap_ = kDefaultWordCap;
};

/// True when the handles denote the same algebra, by identity or structure.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// A GF(2) combination of words: a word is a term iff its coefficient is 1,
/// so p + p = 0 holds structurally. Terms are kept in canonical order.
class Polynomial {
public:
    explicit Polynomial(AlgebraPtr algebra);
    static Polynomial zero(AlgebraPtr algebra) { return Polynomial(std::move(algebra)); }
    static Polynomial unit(AlgebraPtr algebra);
    static Polynomial from_word(AlgebraPtr algebra, Word w);
    static Polynomial from_words(AlgebraPtr algebra, std::vector<Word> words);
    static Polynomial generator(const AlgebraPtr& algebra, std::string_view name);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Word>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const { return terms_.size() == 1 && terms_.front().is_unit(); }
    std::size_t term_count() const { return terms_.size(); }
    bool contains(const Word& w) const;
    bool contains_unit() const { return contains(Word()); }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;

    /// Reverses every term; an involutive anti-automorphism.
    Polynomial reversed() const;

    bool operator==(const Polynomial& rhs) const;

private:
    AlgebraPtr algebra_;
    std::vector<Word> terms_;
};

enum class Homogeneity { zero, homogeneous, mixed };

struct HomogeneityReport {
    Homogeneity kind = Homogeneity::zero;
    int degree = 0;  ///< meaningful only when kind == homogeneous
};

HomogeneityReport homogeneity(const Polynomial& p);

/// Zero counts as homogeneous of every degree.
bool is_homogeneous_of(const Polynomial& p, long long degree);

std::string to_string(const Polynomial& p);

/// Substitute `image` for the generator `target` in every word of `p`,
/// expanding products. Linear and multiplicative in the obvious sense.
Polynomial substitute(const Polynomial& p, GenIndex target, const Polynomial& image);

/// Grammar shared with the CLI: a polynomial is a `+`-separated list of
/// products of whitespace-separated generator names; `1` denotes the unit
/// and `0` the zero polynomial.
Polynomial parse_polynomial(const AlgebraPtr& algebra, std::string_view text);

}  // namespace legdga
