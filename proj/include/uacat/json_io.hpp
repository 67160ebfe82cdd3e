#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "uacat/automorphism.hpp"

namespace uacat {

// {domain_rank, codomain_rank, images: [...]} with canonical image strings
nlohmann::json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j, const Variety& v);

// {kind, variety, object_action?, table?}
nlohmann::json spec_to_json(const AutomorphismSpec& spec, const Variety& v);
AutomorphismSpec spec_from_json(const nlohmann::json& j, Variety& v_out);
AutomorphismSpec load_spec_file(const std::string& path, Variety& v_out);

nlohmann::json report_to_json(const Report& report);

// Canonical normal-form string (word as comma-separated indices, Munn
// element as DFS serialization); parse accepts what the term parser accepts.
NormalForm element_from_string(const std::string& text, const Variety& v);

}  // namespace uacat
