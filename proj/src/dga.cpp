#include "legdga/dga.hpp"

#include <cstdlib>

namespace legdga {

ChekanovDGA::ChekanovDGA(AlgebraPtr algebra, std::vector<Polynomial> differentials,
                         std::optional<KnotMetadata> metadata)
    : algebra_(std::move(algebra)),
      differentials_(std::move(differentials)),
      metadata_(std::move(metadata)) {
    if (!algebra_) throw Error("DGA requires an ambient algebra");
    if (differentials_.size() != algebra_->size())
        throw Error("every generator needs a differential entry (zero entries are explicit)");
    for (const Polynomial& p : differentials_)
        if (!same_algebra(p.algebra(), algebra_)) throw AlgebraMismatchError();
    if (metadata_) {
        const int expected = 2 * std::abs(metadata_->maslov_number);
        if (algebra_->grading_modulus() != expected)
            throw Error("grading modulus must equal 2 * |maslov number| = " +
                        std::to_string(expected));
    }
}

const Polynomial& ChekanovDGA::differential(GenIndex i) const {
    if (i >= differentials_.size()) throw Error("generator index out of range");
    return differentials_[i];
}

const Polynomial& ChekanovDGA::differential(std::string_view name) const {
    return differentials_[algebra_->index_of(name)];
}

std::string ChekanovDGA::display_name() const {
    return metadata_ ? metadata_->display_name : std::string();
}

bool ChekanovDGA::operator==(const ChekanovDGA& rhs) const {
    return same_algebra(algebra_, rhs.algebra_) && differentials_ == rhs.differentials_ &&
           metadata_ == rhs.metadata_;
}

Polynomial apply_differential(const ChekanovDGA& dga, const Word& w) {
    const AlgebraPtr& alg = dga.algebra();
    Polynomial out(alg);
    for (std::size_t i = 0; i < w.length(); ++i) {
        const Polynomial left = Polynomial::from_word(alg, w.subword(0, i));
        const Polynomial right = Polynomial::from_word(alg, w.subword(i + 1, w.length() - i - 1));
        out += left * dga.differential(w[i]) * right;
    }
    return out;
}

Polynomial apply_differential(const ChekanovDGA& dga, const Polynomial& p) {
    if (!same_algebra(p.algebra(), dga.algebra())) throw AlgebraMismatchError();
    Polynomial out(dga.algebra());
    for (const Word& w : p.terms()) out += apply_differential(dga, w);
    return out;
}

AxiomReport check_axioms(const ChekanovDGA& dga) {
    AxiomReport report;
    const Algebra& alg = *dga.algebra();
    for (GenIndex g = 0; g < alg.size(); ++g) {
        const std::string& name = alg.generator(g).name;
        const Polynomial& dg = dga.differential(g);
        const auto h = homogeneity(dg);
        const long long want = static_cast<long long>(alg.generator(g).degree) - 1;
        if (h.kind == Homogeneity::mixed) {
            report.degree_ok = false;
            report.violations.push_back("d(" + name + ") is not homogeneous: " + to_string(dg));
        } else if (h.kind == Homogeneity::homogeneous && !alg.degrees_equal(h.degree, want)) {
            report.degree_ok = false;
            report.violations.push_back("d(" + name + ") has degree " + std::to_string(h.degree) +
                                        ", expected " + std::to_string(alg.reduce_degree(want)));
        }
        const Polynomial dd = apply_differential(dga, dg);
        if (!dd.is_zero()) {
            report.d_squared_zero = false;
            report.violations.push_back("d^2(" + name + ") = " + to_string(dd) + " != 0");
        }
    }
    return report;
}

ChekanovDGA mirror(const ChekanovDGA& dga) {
    std::vector<Polynomial> reversed;
    reversed.reserve(dga.differentials().size());
    for (const Polynomial& p : dga.differentials()) reversed.push_back(p.reversed());
    return ChekanovDGA(dga.algebra(), std::move(reversed), dga.metadata());
}

ChekanovDGA apply_automorphism(const ChekanovDGA& dga, const ElementaryAutomorphism& phi) {
    const AlgebraPtr& alg = dga.algebra();
    const GenIndex target = alg->index_of(phi.target);
    if (!same_algebra(phi.shift.algebra(), alg)) throw AlgebraMismatchError();
    for (const Word& w : phi.shift.terms())
        for (GenIndex g : w.factors())
            if (g == target)
                throw Error("substitution shift for '" + phi.target + "' mentions '" +
                            phi.target + "'");
    if (!is_homogeneous_of(phi.shift, alg->generator(target).degree))
        throw Error("substitution shift for '" + phi.target +
                    "' must be homogeneous of degree " +
                    std::to_string(alg->degree_of(target)));

    const Polynomial image =
        Polynomial::from_word(alg, Word::single(target)) + phi.shift;

    std::vector<Polynomial> out;
    out.reserve(dga.differentials().size());
    for (GenIndex g = 0; g < alg->size(); ++g) {
        Polynomial source = dga.differential(g);
        if (g == target) source += apply_differential(dga, phi.shift);
        out.push_back(substitute(source, target, image));
    }
    return ChekanovDGA(alg, std::move(out), dga.metadata());
}

ChekanovDGA apply_automorphisms(const ChekanovDGA& dga,
                                std::span<const ElementaryAutomorphism> phis) {
    ChekanovDGA out = dga;
    for (const ElementaryAutomorphism& phi : phis) out = apply_automorphism(out, phi);
    return out;
}

ChekanovDGA stabilize(const ChekanovDGA& dga, int degree,
                      const std::pair<std::string, std::string>& names) {
    const Algebra& alg = *dga.algebra();
    if (names.first == names.second)
        throw Error("stabilization needs two distinct generator names");
    for (const auto& name : {names.first, names.second})
        if (alg.find(name)) throw Error("generator name collision: '" + name + "'");

    std::vector<GeneratorSymbol> gens = alg.generators();
    gens.push_back({names.first, degree});
    gens.push_back({names.second, degree - 1});
    AlgebraPtr extended =
        Algebra::make(std::move(gens), alg.grading_modulus(), alg.word_length_cap());

    std::vector<Polynomial> diffs;
    diffs.reserve(extended->size());
    for (const Polynomial& p : dga.differentials()) {
        std::vector<Word> words(p.terms().begin(), p.terms().end());
        diffs.push_back(Polynomial::from_words(extended, std::move(words)));
    }
    const GenIndex e2 = static_cast<GenIndex>(extended->size() - 1);
    diffs.push_back(Polynomial::from_word(extended, Word::single(e2)));  // d(e1) = e2
    diffs.push_back(Polynomial::zero(extended));                         // d(e2) = 0
    return ChekanovDGA(std::move(extended), std::move(diffs), dga.metadata());
}

}  // namespace legdga
