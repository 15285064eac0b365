#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tensq {

// Permutation of {0..degree-1} by image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::uint32_t degree);           // identity
  explicit Perm(std::vector<std::uint32_t> images);

  // 1-based cycle, e.g. Perm::cycle(5, {1,2,3}) is (1 2 3) on 5 points.
  static Perm cycle(std::uint32_t degree,
                    const std::vector<std::uint32_t>& points);

  std::uint32_t degree() const { return (std::uint32_t)img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  mpz_class order() const;  // lcm of cycle lengths

  // (a*b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  std::string cycle_string() const;  // 1-based, "()" for the identity

 private:
  std::vector<std::uint32_t> img_;
};

}  // namespace tensq
