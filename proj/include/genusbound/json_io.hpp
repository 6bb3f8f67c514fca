#pragma once

#include "genusbound/algebra.hpp"
#include "genusbound/reduction.hpp"

#include <nlohmann/json_fwd.hpp>

namespace genusbound {

// JSON wire formats. The algebra schema is the CLI input contract:
//   {"form": {"tag":"odd","n":2} | {"tag":"even","q":1}
//            | {"tag":"hyperbolic"} | {"tag":"v"},
//    "b1": int, "tilde_b1": int, "F": [int,...]?}

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

AlgebraDescriptor algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const AlgebraDescriptor& alg);

nlohmann::json trace_to_json(const ReductionTrace& tr);
ReductionTrace trace_from_json(const nlohmann::json& j);

/// Parses "a,b,..." (optionally bracketed) into a coefficient vector.
Vec parse_class_list(const std::string& text);

}  // namespace genusbound
