#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensq/int_matrix.hpp"

namespace tensq {

// Finitely generated abelian group in invariant-factor normal form:
// torsion d_1 | d_2 | ... | d_k (each >= 2) followed by `rank` copies of Z.
// In the flat factor view the infinite factors are encoded as zeros, which
// trail the torsion part.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Canonicalizes an arbitrary multiset of cyclic orders (0 = Z, 1 dropped).
  static AbelianGroup from_cyclic_orders(std::vector<mpz_class> orders);
  static AbelianGroup free(std::size_t rank);
  static AbelianGroup cyclic(const mpz_class& n);

  const std::vector<mpz_class>& torsion() const { return torsion_; }
  std::size_t rank() const { return rank_; }

  // Flat invariant-factor sequence with trailing zeros for Z factors.
  std::vector<mpz_class> invariant_factors() const;

  bool is_trivial() const { return torsion_.empty() && rank_ == 0; }

  // Rendered as e.g. "C2 x C4 x Z^3"; the trivial group prints as "1".
  std::string to_text() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<mpz_class> torsion_;
  std::size_t rank_ = 0;
};

// Cokernel of m acting on Z^cols (unit factors dropped, zeros become Z).
AbelianGroup abelian_from_matrix(const IntMatrix& m);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// Bilinear tensor product over Z: C_m (x) C_n = C_gcd(m,n), Z (x) C_n = C_n,
// Z (x) Z = Z.
AbelianGroup tensor_ab(const AbelianGroup& a, const AbelianGroup& b);

// Whitehead quadratic functor: Gamma(Z) = Z, Gamma(C_n) = C_n for odd n and
// C_2n for even n, Gamma(A + B) = Gamma(A) + Gamma(B) + A (x) B.
AbelianGroup gamma_whitehead(const AbelianGroup& a);

// Number of infinite cyclic factors.
std::size_t hirsch(const AbelianGroup& a);

// Group order; nullopt means infinite.
std::optional<mpz_class> order_ab(const AbelianGroup& a);

// True iff some finite invariant factor is even.
bool has_two_torsion(const AbelianGroup& a);

// Reconstructs the type of a finite abelian group from the multiset of its
// element orders (the counts of solutions of x^{p^k} = 1 determine the
// partition of exponents at every prime).
AbelianGroup abelian_type_from_element_orders(
    const std::vector<std::uint64_t>& orders);

}  // namespace tensq
