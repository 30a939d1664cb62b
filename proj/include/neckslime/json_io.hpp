#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "neckslime/bijection.hpp"
#include "neckslime/code.hpp"
#include "neckslime/necklace.hpp"
#include "neckslime/slime.hpp"
#include "neckslime/verifier.hpp"

namespace neckslime {

// Key order follows the documented schemas, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Code& f);                     // {"entries":[...],"n":..,"k":..}
Json to_json(const SlimeDecomposition& d);       // {"m","valid","weight"?,"slimes":[{"start","len"}]}
Json to_json(const Necklace& x);                 // {"canonical":[...],"word":"..."}
Json to_json(const BijectionTable& table);
Json to_json(const RiwiReport& report);
// Timing goes under "meta" and is left out when include_timing is false.
Json to_json(const Certificate& cert, bool include_timing = true);

// Header "code,necklace,word"; code and necklace literals are quoted.
std::string table_to_csv(const BijectionTable& table);
std::string table_to_text(const BijectionTable& table);

// --map files: [{"from":[...], "to":[...]}, ...]. Throws DomainError on bad shape.
std::vector<std::pair<Code, Code>> parse_map(const nlohmann::json& doc);
std::vector<std::pair<Code, Code>> load_map_file(const std::filesystem::path& path);

}  // namespace neckslime
