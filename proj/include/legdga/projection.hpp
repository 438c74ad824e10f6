#pragma once

#include <vector>

#include "legdga/algebra.hpp"

namespace legdga {

/// A grading-preserving algebra map between free graded algebras, defined by
/// the images of the source generators (extended multiplicatively).
class ProjectionMap {
public:
    /// `images[i]` is the image of source generator i; each nonzero image
    /// must be homogeneous of the source generator's degree.
    ProjectionMap(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const Polynomial& image(GenIndex i) const;
    const std::vector<Polynomial>& images() const { return images_; }

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<Polynomial> images_;
};

/// Unital, additive, multiplicative extension of the generator images.
Polynomial project(const ProjectionMap& pi, const Polynomial& p);

}  // namespace legdga
