#pragma once

#include "perfgrp/perm_group.hpp"

namespace perfgrp {

/// A group homomorphism determined by images of the source generators.
///
/// Well-definedness is checked with the graph criterion: the subgroup of
/// source x target generated by the pairs (g_i, image_i) has the same
/// order as the source. Two copies of the graph group are kept, one with
/// source points first (for evaluation) and one with target points first
/// (for preimages).
class Homomorphism {
public:
    /// Throws InputError on arity/degree mismatch, VerificationError if the
    /// assignment does not extend to a homomorphism.
    static Homomorphism from_images(const PermGroup& source, const PermGroup& target,
                                    std::vector<Permutation> images);

    const PermGroup& source() const noexcept { return source_; }
    const PermGroup& target() const noexcept { return target_; }
    const std::vector<Permutation>& images() const noexcept { return images_; }
    bool surjective() const noexcept { return surjective_; }
    std::uint64_t image_order() const noexcept { return image_order_; }

    Permutation apply(const Permutation& g) const;
    /// Some element mapping to h; throws PreconditionError if h is not in
    /// the image.
    Permutation preimage(const Permutation& h) const;

private:
    Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> images);

    PermGroup source_;
    PermGroup target_;
    std::vector<Permutation> images_;
    PermGroup forward_graph_;
    PermGroup backward_graph_;
    bool surjective_ = false;
    std::uint64_t image_order_ = 1;
};

} // namespace perfgrp
