#include "tensq/perm.hpp"

#include <numeric>
#include <sstream>

#include "tensq/errors.hpp"

namespace tensq {

Perm::Perm(std::uint32_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw BadParams("image table is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::cycle(std::uint32_t degree,
                 const std::vector<std::uint32_t>& points) {
  Perm p(degree);
  if (points.empty()) return p;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint32_t from = points[i];
    std::uint32_t to = points[(i + 1) % points.size()];
    if (from < 1 || from > degree || to < 1 || to > degree)
      throw BadParams("cycle point out of range");
    p.img_[from - 1] = to - 1;
  }
  // Validate disjointness via the permutation check.
  return Perm(p.img_);
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

mpz_class Perm::order() const {
  mpz_class ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    std::uint32_t x = i;
    while (!seen[x]) {
      seen[x] = true;
      x = img_[x];
      ++len;
    }
    mpz_class l = (unsigned long)len;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), l.get_mpz_t());
  }
  return ord;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("perm degrees differ");
  Perm c;
  c.img_.resize(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x) c.img_[x] = a.img_[b.img_[x]];
  return c;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << "(";
    std::uint32_t x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << " ";
      first = false;
      os << (x + 1);
      x = img_[x];
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace tensq
