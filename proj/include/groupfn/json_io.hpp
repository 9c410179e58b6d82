#pragma once

#include "groupfn/atom_registry.hpp"
#include "groupfn/check_report.hpp"
#include "groupfn/group_functions.hpp"

#include <string>

namespace groupfn {

// Registry file: a JSON list of atoms, each either a named constant or an
// explicit minimal polynomial with an isolating root interval:
//   [{"id": "a1", "constant": "sqrt2"},
//    {"id": "u", "minpoly": [-3, 0, 1], "root_interval": ["1/1", "2/1"]}]
RegistryPtr registry_from_json(const Json& j);
RegistryPtr load_registry_file(const std::string& path);

// Theta file: a flat JSON object mapping atom ids to rational coefficients;
// the reserved key "c_b" (default "0/1") is the coefficient of b.
//   {"c_b": "0/1", "sqrt2": "-1/1"}
AdditiveSpec theta_from_json(const Json& j, const RegistryPtr& reg);
AdditiveSpec load_theta_file(const std::string& path, const RegistryPtr& reg);

// Function spec strings: "pi", "gmi", "pi+theta:<file>", "gmi+theta:<file>".
GroupFunction parse_function_spec(const std::string& spec, const RegistryPtr& reg);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& body);

// Common report preamble: schema version, command, config echo, registry
// identity and the declared-assumption notes.
Json report_header(const std::string& command, const Json& config, const RegistryPtr& reg);

}  // namespace groupfn
