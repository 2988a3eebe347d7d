#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "grpfun/function_space.hpp"

namespace grpfun {

using Json = nlohmann::ordered_json;

// cyclic:n | symmetric:n | dihedral:n | product:<spec>,<spec>
// Throws Errc::parse with the failing position.
GroupPtr parse_group_spec(std::string_view expr);

// {"kind":"cayley",...} | {"kind":"perm",...} | {"kind":"spec","expr":...}
GroupPtr group_from_json(const Json& j);
// Always the cayley form; byte-stable for a given table.
Json group_to_json(const Group& g);

// A spec expression, or a path to a group JSON file.
GroupPtr load_group(std::string_view spec_or_path);

Json function_to_json(const GroupFunction& f);
GroupFunction function_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace grpfun
