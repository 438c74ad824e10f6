#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "legdga/algebra.hpp"

namespace legdga {

struct KnotMetadata {
    std::string display_name;
    std::string smooth_type;
    int thurston_bennequin = 0;
    int maslov_number = 0;

    bool operator==(const KnotMetadata&) const = default;
};

/// A free graded algebra with a differential given on generators and
/// extended by the GF(2) Leibniz rule.
class ChekanovDGA {
public:
    /// `differentials[i]` is the boundary of generator i; every generator
    /// needs an entry (zero entries are explicit, not implied). When
    /// metadata is present, the algebra's grading modulus must equal
    /// 2 * |maslov number|.
    ChekanovDGA(AlgebraPtr algebra, std::vector<Polynomial> differentials,
                std::optional<KnotMetadata> metadata = {});

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Polynomial>& differentials() const { return differentials_; }
    const Polynomial& differential(GenIndex i) const;
    const Polynomial& differential(std::string_view name) const;
    const std::optional<KnotMetadata>& metadata() const { return metadata_; }
    std::string display_name() const;

    bool operator==(const ChekanovDGA& rhs) const;

private:
    AlgebraPtr algebra_;
    std::vector<Polynomial> differentials_;
    std::optional<KnotMetadata> metadata_;
};

/// Leibniz extension of the generator table: on a word g1...gk this is
/// sum_i g1...g_{i-1} d(g_i) g_{i+1}...gk; linear in polynomials.
Polynomial apply_differential(const ChekanovDGA& dga, const Word& w);
Polynomial apply_differential(const ChekanovDGA& dga, const Polynomial& p);

struct AxiomReport {
    bool degree_ok = true;
    bool d_squared_zero = true;
    std::vector<std::string> violations;

    bool ok() const { return degree_ok && d_squared_zero; }
};

/// Checks that every d(g) is homogeneous of degree deg(g) - 1 (or zero) and
/// that d(d(g)) = 0 for every generator.
AxiomReport check_axioms(const ChekanovDGA& dga);

/// The Legendrian mirror: every monomial of every differential reversed.
ChekanovDGA mirror(const ChekanovDGA& dga);

/// A tame elementary change of generators g -> g + shift, where the shift
/// does not mention g and is homogeneous of deg(g) (or zero).
struct ElementaryAutomorphism {
    std::string target;
    Polynomial shift;
};

/// Rewrites the DGA in the new generators. Over GF(2) every elementary
/// automorphism is an involution, so applying it twice restores the input.
ChekanovDGA apply_automorphism(const ChekanovDGA& dga, const ElementaryAutomorphism& phi);
ChekanovDGA apply_automorphisms(const ChekanovDGA& dga,
                                std::span<const ElementaryAutomorphism> phis);

/// Adjoins generators e1 (of the given degree) and e2 = d(e1).
ChekanovDGA stabilize(const ChekanovDGA& dga, int degree,
                      const std::pair<std::string, std::string>& names = {"e1", "e2"});

}  // namespace legdga
