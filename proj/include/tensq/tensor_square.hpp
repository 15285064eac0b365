#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensq/abelian.hpp"
#include "tensq/coset_table.hpp"
#include "tensq/mul_table.hpp"
#include "tensq/perm_group.hpp"
#include "tensq/presentation.hpp"

namespace tensq {

// Group on two copies of the generators of p whose commutator subgroup
// [G, G^phi] realizes the nonabelian tensor square: both copies satisfy the
// relators of p, and for all generator triples (x, g, h) the conjugates of
// [g, h^phi] by x and by x^phi both equal [x g x^-1, (x h x^-1)^phi].
Presentation nu_presentation(const Presentation& p);

// Regular multiplication table of the group presented by p.
MulTable mul_table_from_presentation(const Presentation& p,
                                     const EnumerationBudget& budget);

enum class TensorMethod { Definitional, Nu };

struct TensorStats {
  std::uint64_t group_order = 0;
  std::uint64_t action_degree = 0;   // cosets in the nu / symbol table
  std::uint64_t cosets_defined = 0;  // total rows the enumerator allocated
};

// A computed tensor square with its diagram decomposition.  The three
// order identities  |T| = |nabla| * exterior,  exterior = |M| * derived,
// |T| = |J2| * derived  are enforced at construction; their failure is a
// bug, not a result.
struct TensorSquareData {
  TensorMethod method = TensorMethod::Nu;
  std::uint64_t tensor_order = 1;
  MulTable tensor_table;
  PermGroup tensor_group;
  AbelianGroup nabla;
  std::uint64_t nabla_order = 1;
  std::uint64_t exterior_order = 1;
  std::uint64_t derived_order = 1;  // size of the image of kappa
  std::uint64_t j2_order = 1;
  std::uint64_t schur_order = 1;
  AbelianGroup j2;
  AbelianGroup schur;

  // Element sets inside tensor_table, plus kappa as an element map into
  // g_table; kept for the diagram checks and for tests.
  std::vector<std::uint32_t> j2_elements;
  std::vector<std::uint32_t> nabla_elements;
  std::vector<std::uint32_t> generator_elements;
  std::vector<std::uint32_t> kappa;

  MulTable g_table;
  AbelianGroup g_ab;
  TensorStats stats;
};

// Tensor square through the nu-group: enumerate nu(G) over the phi copy of
// G (the tensor subgroup acts freely on those cosets, so elements are
// identified with points), take the normal closure of the generator
// commutators [g_i, g_j^phi], and cut the diagram out of it.
TensorSquareData tensor_square_nu(const Presentation& p,
                                  const EnumerationBudget& budget);

// Tensor square straight from the defining biderivation relations on |G|^2
// symbols; the independent oracle for the nu route.
TensorSquareData tensor_square_definitional(const MulTable& g,
                                            const EnumerationBudget& budget,
                                            std::uint32_t cap = 16);

// Bilinear tensor square of an abelian group with its nabla/exterior split,
// computed by exact lattice arithmetic on the basis of e_i (x) e_j.
struct AbelianTensorData {
  AbelianGroup tensor;
  AbelianGroup nabla;
  AbelianGroup exterior;
};
AbelianTensorData abelian_tensor_shortcut(const AbelianGroup& a);

struct DiagramCheck {
  std::string name;
  bool pass = false;
  std::string details;
};
struct DiagramReport {
  std::vector<DiagramCheck> checks;
  bool all_pass() const;
};

// PASS/FAIL record for the commutative-diagram facts: kappa surjects onto
// the derived subgroup, the exactness order arithmetic, centrality of J2,
// the Whitehead-functor identity and the nabla comparison when the
// abelianization has no 2-torsion.
DiagramReport diagram_report(const TensorSquareData& d);

}  // namespace tensq
