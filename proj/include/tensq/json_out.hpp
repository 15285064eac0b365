#pragma once

#include "json.hpp"
#include "tensq/abelian.hpp"
#include "tensq/claims.hpp"
#include "tensq/families.hpp"
#include "tensq/tensor_square.hpp"

namespace tensq {

// All reports use ordered JSON with fixed insertion order so that repeated
// runs are byte-identical.
using ojson = nlohmann::ordered_json;

ojson json_of(const AbelianGroup& a);
ojson json_of(const TensorSquareData& d, const DiagramReport& r,
              const std::string& group_name);
ojson json_of(const ClaimReport& r);
ojson json_of(const PredictedStructure& p);

std::string render_text(const ClaimReport& r);

}  // namespace tensq
