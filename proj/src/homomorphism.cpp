#include "perfgrp/homomorphism.hpp"

#include "perfgrp/errors.hpp"

#include <string>

namespace perfgrp {

namespace {

Permutation pair_perm(const Permutation& first, const Permutation& second) {
    const std::size_t n = first.degree() + second.degree();
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < first.degree(); ++i)
        images[i] = first[i];
    for (std::size_t i = 0; i < second.degree(); ++i)
        images[first.degree() + i] = static_cast<Point>(first.degree() + second[i]);
    return Permutation::from_images(std::move(images));
}

} // namespace

Homomorphism::Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

Homomorphism Homomorphism::from_images(const PermGroup& source, const PermGroup& target,
                                       std::vector<Permutation> images) {
    const auto& gens = source.generators();
    if (images.size() != gens.size())
        throw InputError("homomorphism needs one image per source generator (" +
                         std::to_string(gens.size()) + "), got " + std::to_string(images.size()));
    for (const auto& im : images) {
        if (im.degree() != target.degree())
            throw InputError("image degree does not match target degree");
        if (!target.contains(im))
            throw VerificationError("image " + im.to_string() + " is not in the target group");
    }

    Homomorphism hom(source, target, images);
    const std::size_t n = source.degree() + target.degree();
    hom.forward_graph_ = PermGroup::trivial(n);
    hom.backward_graph_ = PermGroup::trivial(n);
    PermGroup image_group = PermGroup::trivial(target.degree());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        hom.forward_graph_.add_generator(pair_perm(gens[i], images[i]));
        hom.backward_graph_.add_generator(pair_perm(images[i], gens[i]));
        image_group.add_generator(images[i]);
    }
    if (hom.forward_graph_.order() != source.order())
        throw VerificationError("generator images do not define a homomorphism (graph order " +
                                std::to_string(hom.forward_graph_.order()) + " != source order " +
                                std::to_string(source.order()) + ")");
    hom.image_order_ = image_group.order();
    hom.surjective_ = image_group.order() == target.order();
    return hom;
}

Permutation Homomorphism::apply(const Permutation& g) const {
    if (!source_.contains(g))
        throw PreconditionError("homomorphism applied to an element outside its source");
    auto u = forward_graph_.factor_prefix(g.images());
    if (!u)
        throw InternalError("graph group failed to factor a source element");
    return u->restrict(source_.degree(), target_.degree());
}

Permutation Homomorphism::preimage(const Permutation& h) const {
    if (h.degree() != target_.degree())
        throw InputError("preimage: degree mismatch");
    auto u = backward_graph_.factor_prefix(h.images());
    if (!u)
        throw PreconditionError("preimage: element " + h.to_string() + " is not in the image");
    return u->restrict(target_.degree(), source_.degree());
}

} // namespace perfgrp
