#pragma once

#include <json.hpp>

#include "cubealg/groebner.hpp"
#include "cubealg/ideals.hpp"
#include "cubealg/series.hpp"

namespace cubealg {

// Monomial <-> [{subset: [ints], exp: int}, ...] (ascending variable order).
nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j, int n);

// Polynomial <-> [{coeff: "p/q", mono: [...]}, ...] (descending terms).
nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j, int n);

nlohmann::json generator_set_to_json(const GeneratorSet& gens);
GeneratorSet generator_set_from_json(const nlohmann::json& j);

// Predicted leading-term generators with their family tags.
nlohmann::json predicted_lt_to_json(int r, int n, const std::vector<TaggedMonomial>& gens);

nlohmann::json groebner_to_json(const GroebnerBasis& gb);
GroebnerBasis groebner_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const IdentityReport& report);
IdentityReport report_from_json(const nlohmann::json& j);

}  // namespace cubealg
