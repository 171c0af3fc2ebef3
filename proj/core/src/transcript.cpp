#include "catan/transcript.hpp"

#include <fstream>

#include <json.hpp>

#include "catan/errors.hpp"

namespace catanrl {

namespace {

using nlohmann::json;

json action_to_json(const Action& a) {
    json j;
    j["type"] = action_type_name(a.type);
    switch (a.type) {
        case ActionType::PlaceSettlement:
        case ActionType::PlaceCity:
            j["intersection"] = a.target;
            break;
        case ActionType::PlaceRoad:
            j["path"] = a.target;
            break;
        case ActionType::MoveRobberSteal:
        case ActionType::MoveRobberNoSteal:
            j["hex"] = a.target;
            break;
        case ActionType::DiscardKeep:
            j["keep"] = a.keep;
            break;
        case ActionType::BankTrade:
            j["give"] = resource_name(a.give);
            j["receive"] = resource_name(a.receive);
            break;
        case ActionType::ChooseFreeResource:
        case ActionType::PlayMonopoly:
            j["resource"] = resource_name(a.resource);
            break;
        default:
            break;
    }
    return j;
}

json resources_to_json(const ResourceVec& v) {
    json j = json::object();
    for (int r = 0; r < kNumResources; ++r)
        if (v.at(r) > 0) j[resource_name(static_cast<Resource>(r))] = v.at(r);
    return j;
}

} // namespace

std::string record_to_json_line(const TransitionRecord& rec) {
    json j;
    j["turn"] = rec.turn;
    j["player"] = rec.player;
    j["action"] = action_to_json(rec.action);
    if (rec.dice) j["dice"] = *rec.dice;
    json produced = json::object();
    for (int p = 0; p < kNumPlayers; ++p)
        if (rec.produced[p].total() > 0)
            produced["p" + std::to_string(p)] = resources_to_json(rec.produced[p]);
    if (!produced.empty()) j["produced"] = produced;
    if (rec.stolen) j["stolen"] = resource_name(*rec.stolen);
    j["phase"] = phase_kind_name(rec.phase_after);
    return j.dump();
}

void write_transcript(const std::vector<TransitionRecord>& records, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw ConfigError("cannot open transcript file: " + path);
    for (const TransitionRecord& rec : records) os << record_to_json_line(rec) << "\n";
}

} // namespace catanrl
