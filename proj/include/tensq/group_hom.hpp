#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tensq/perm.hpp"
#include "tensq/perm_group.hpp"
#include "tensq/presentation.hpp"

namespace tensq {

// Verified homomorphism given by generator images (target elements are
// permutations).  Construction fails with NotAHomomorphism when the images
// do not satisfy the source relations.
class GroupHom {
 public:
  // Source given by a presentation: every relator image must be trivial.
  static GroupHom from_presentation(const Presentation& src,
                                    std::uint32_t target_degree,
                                    std::vector<Perm> images);

  // Source given by a permutation group: verified by the subdirect-product
  // order test |<(g_i, images_i)>| = |src|.
  static GroupHom from_perm_group(PermGroup src, std::uint32_t target_degree,
                                  std::vector<Perm> images);

  const std::vector<Perm>& images() const { return images_; }
  std::uint32_t target_degree() const { return target_degree_; }

  // Image of a word over the source generators.
  Perm image_of_word(const Word& w) const;

  mpz_class image_order() const;

  // Kernel (perm-group sources only).
  PermGroup kernel() const;

  const std::optional<PermGroup>& perm_source() const { return perm_source_; }

 private:
  GroupHom() = default;
  std::optional<PermGroup> perm_source_;
  std::uint32_t source_degree_ = 0;  // 0 when the source is a presentation
  std::uint32_t target_degree_ = 1;
  std::vector<Perm> images_;
};

// Kernel of the map g_i -> image_i restricted to the subgroup generated by
// the pairs' first components; the pairs must be (element, its image).
PermGroup kernel_of_pairs(std::uint32_t src_degree, std::uint32_t tgt_degree,
                          const std::vector<std::pair<Perm, Perm>>& pairs);

}  // namespace tensq
