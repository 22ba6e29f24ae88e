#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "rainbow/decide.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"
#include "rainbow/structures.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Family schema: {"n": int, "members": [[[u, v], ...], ...]}, edges within a
// member sorted lexicographically by (u, v).
Json family_to_json(const CycleFamily &family);
CycleFamily family_from_json(const Json &j);

CycleFamily import_family(const std::filesystem::path &path);
void export_family(const CycleFamily &family, const std::filesystem::path &path);
/// Parses text; parse errors carry the byte offset.
Json parse_json(const std::string &text, const std::string &where);

// Certificates: {"kind": "rainbowCycle" | "prunedCactus" | "saguaro" |
// "linkleaf" | "monoCut", ...}; trees nest through "children".
Json to_json(const RainbowCycleCert &cert);
Json to_json(const PrunedCactusCert &cert);
Json to_json(const SaguaroCert &cert);
Json to_json(const LinkleafCert &cert);
Json to_json(const MonoCutCert &cert);

using StructureCert = std::variant<RainbowCycleCert, PrunedCactusCert, SaguaroCert, LinkleafCert, MonoCutCert>;
Json to_json(const StructureCert &cert);

CactusScript cactus_script_from_json(const Json &j);
SaguaroScript saguaro_script_from_json(const Json &j);
LinkleafScript linkleaf_script_from_json(const Json &j);

/// Graphviz rendering: one edge line per (member, edge) colored by member.
std::string to_dot(const CycleFamily &family);
/// As above, with the certificate's tree drawn as nested clusters.
std::string to_dot(const CycleFamily &family, const StructureCert &cert);

}  // namespace rainbow
