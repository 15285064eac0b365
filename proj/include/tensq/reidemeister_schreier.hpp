#pragma once

#include "tensq/coset_table.hpp"
#include "tensq/presentation.hpp"

namespace tensq {

// Presentation of the subgroup enumerated by t on Schreier generators.
// The transversal is the breadth-first Schreier tree of the table; tree
// edges yield trivial generators and are dropped, the remaining edges give
// generators s1, s2, ... and every relator is rewritten at every coset.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

}  // namespace tensq
