#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "legendrian/dga.hpp"

namespace legendrian {

using Json = nlohmann::ordered_json;

Json to_json(const DGA& p);
// Accepts the output of to_json; differential entries may also be strings
// in the element syntax of parse_element. Throws std::invalid_argument.
DGA dga_from_json(const Json& j);
std::string dump_dga(const DGA& p);
DGA parse_dga(std::string_view text);

// Human-readable listing: one "d a_i = ..." line per generator.
std::string format_dga(const DGA& p);

// Builds a DGA from element strings; u/l default to component 0.
DGA make_dga(Mode mode, int modulus, const std::vector<std::string>& names, const std::vector<int>& degrees,
             const std::vector<std::string>& differentials);

}  // namespace legendrian
