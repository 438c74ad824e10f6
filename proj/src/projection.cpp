#include "legdga/projection.hpp"

namespace legdga {

ProjectionMap::ProjectionMap(AlgebraPtr source, AlgebraPtr target,
                             std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) throw Error("projection requires source and target algebras");
    if (images_.size() != source_->size())
        throw Error("projection needs an image for every source generator");
    for (GenIndex g = 0; g < images_.size(); ++g) {
        const Polynomial& img = images_[g];
        if (!same_algebra(img.algebra(), target_)) throw AlgebraMismatchError();
        const std::string& name = source_->generator(g).name;
        const auto h = homogeneity(img);
        if (h.kind == Homogeneity::mixed)
            throw Error("image of '" + name + "' is not homogeneous: " + to_string(img));
        if (h.kind == Homogeneity::homogeneous &&
            !target_->degrees_equal(h.degree, source_->generator(g).degree))
            throw Error("projection is not grading-preserving on '" + name + "': image degree " +
                        std::to_string(h.degree) + ", generator degree " +
                        std::to_string(source_->degree_of(g)));
    }
}

const Polynomial& ProjectionMap::image(GenIndex i) const {
    if (i >= images_.size()) throw Error("generator index out of range");
    return images_[i];
}

Polynomial project(const ProjectionMap& pi, const Polynomial& p) {
    if (!same_algebra(p.algebra(), pi.source())) throw AlgebraMismatchError();
    Polynomial out(pi.target());
    for (const Word& w : p.terms()) {
        Polynomial acc = Polynomial::unit(pi.target());
        for (GenIndex g : w.factors()) {
            acc = acc * pi.image(g);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

}  // namespace legdga
