#include "tensq/group_hom.hpp"

#include "tensq/errors.hpp"

namespace tensq {

namespace {

// Combined permutation on [target | source] points; stabilizing the target
// block pointwise cuts out the kernel.
Perm combine(const Perm& src, const Perm& tgt, std::uint32_t ds,
             std::uint32_t dt) {
  std::vector<std::uint32_t> img(ds + dt);
  for (std::uint32_t x = 0; x < dt; ++x) img[x] = tgt(x);
  for (std::uint32_t x = 0; x < ds; ++x) img[dt + x] = dt + src(x);
  return Perm(std::move(img));
}

}  // namespace

GroupHom GroupHom::from_presentation(const Presentation& src,
                                     std::uint32_t target_degree,
                                     std::vector<Perm> images) {
  if (images.size() != src.generator_count())
    throw BadParams("one image per source generator required");
  for (const Perm& p : images)
    if (p.degree() != target_degree)
      throw BadParams("image degree mismatch");
  GroupHom h;
  h.target_degree_ = target_degree;
  h.images_ = std::move(images);
  for (const Word& r : src.relators())
    if (!h.image_of_word(r).is_identity())
      throw NotAHomomorphism("relator " + std::to_string(&r - src.relators().data()) +
                             " does not map to the identity");
  return h;
}

GroupHom GroupHom::from_perm_group(PermGroup src, std::uint32_t target_degree,
                                   std::vector<Perm> images) {
  if (images.size() != src.generators().size())
    throw BadParams("one image per source generator required");
  for (const Perm& p : images)
    if (p.degree() != target_degree) throw BadParams("image degree mismatch");

  const std::uint32_t ds = src.degree();
  std::vector<Perm> pairs;
  for (std::size_t i = 0; i < images.size(); ++i)
    pairs.push_back(combine(src.generators()[i], images[i], ds,
                            target_degree));
  PermGroup graph(ds + target_degree, pairs);
  if (graph.order() != src.order())
    throw NotAHomomorphism("generator images violate a source relation");

  GroupHom h;
  h.perm_source_ = std::move(src);
  h.source_degree_ = ds;
  h.target_degree_ = target_degree;
  h.images_ = std::move(images);
  return h;
}

Perm GroupHom::image_of_word(const Word& w) const {
  Perm out(target_degree_);
  for (const Letter& l : w.syllables()) {
    if (l.gen >= (int)images_.size())
      throw BadParams("word uses a generator without an image");
    Perm g = l.exp > 0 ? images_[l.gen] : images_[l.gen].inverse();
    long long e = std::abs((long long)l.exp);
    for (long long i = 0; i < e; ++i) out = out * g;
  }
  return out;
}

mpz_class GroupHom::image_order() const {
  return PermGroup(target_degree_, images_).order();
}

PermGroup GroupHom::kernel() const {
  internal_check(perm_source_.has_value(),
                 "kernel requires a permutation-group source");
  std::vector<std::pair<Perm, Perm>> pairs;
  for (std::size_t i = 0; i < images_.size(); ++i)
    pairs.emplace_back(perm_source_->generators()[i], images_[i]);
  return kernel_of_pairs(source_degree_, target_degree_, pairs);
}

PermGroup kernel_of_pairs(std::uint32_t src_degree, std::uint32_t tgt_degree,
                          const std::vector<std::pair<Perm, Perm>>& pairs) {
  std::vector<Perm> combined;
  for (const auto& [s, t] : pairs)
    combined.push_back(combine(s, t, src_degree, tgt_degree));
  PermGroup graph(src_degree + tgt_degree, combined);
  std::vector<Perm> stab = graph.pointwise_stabilizer(tgt_degree);
  std::vector<Perm> kernel_gens;
  for (const Perm& g : stab) {
    std::vector<std::uint32_t> img(src_degree);
    for (std::uint32_t x = 0; x < src_degree; ++x)
      img[x] = g(tgt_degree + x) - tgt_degree;
    Perm k{std::move(img)};
    if (!k.is_identity()) kernel_gens.push_back(k);
  }
  return PermGroup(src_degree, kernel_gens);
}

}  // namespace tensq
