#pragma once

#include <json.hpp>

#include "qub/blocks.hpp"
#include "qub/fock.hpp"

namespace qub {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const ChargedBetaSet& b);
json to_json(const Symbol& s);
json to_json(const CharacterLabel& c);
json to_json(const BlockLabel& b, const ModularContext& ctx);
json to_json(const Weight& w);
json to_json(const FockElement& x);
json to_json(const BrauerTree& t);

Partition partition_from_json(const json& j);

// "c:parts" -> charged beta-set, e.g. "0:3,1" or "-2:".
ChargedBetaSet parse_charged_row(const std::string& text);
// "[c:parts][c:parts]" -> symbol.
Symbol parse_symbol(const std::string& text);

}  // namespace qub
