#pragma once

#include <string>
#include <vector>

#include "tensq/int_matrix.hpp"
#include "tensq/word.hpp"

namespace tensq {

// A finite presentation: named generators plus relator words equal to the
// identity.  Generator names matter only at the DSL boundary; all word
// arithmetic is on dense indices.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, std::vector<std::string> generator_names,
               std::vector<Word> relators);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return names_.size(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::string name_ = "G";
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// Disjoint union of generators, both relator sets, plus all cross
// commutators.  Clashing names from q get numeric suffixes.
Presentation direct_product(const Presentation& p, const Presentation& q);

// One row per relator, one column per generator; entries are exponent sums.
IntMatrix abelianized_relation_matrix(const Presentation& p);

// True iff the relator multisets agree under the given generator mapping,
// where relators compare equal up to cyclic rotation and inversion and a
// generator may map to an inverse generator.  gen_map[i] = +-(j+1) sends
// generator i of p to generator j (or its inverse) of q.
bool presentations_match(const Presentation& p, const Presentation& q,
                         const std::vector<int>& gen_map);

}  // namespace tensq
