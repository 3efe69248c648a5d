#include "idpd/config_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace idpd {

using nlohmann::json;

namespace {

const json& require_key(const json& doc, const std::string& key, const std::string& where) {
    auto it = doc.find(key);
    if (it == doc.end()) throw config_error("missing key \"" + where + key + "\"");
    return *it;
}

std::int64_t require_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw config_error("key \"" + where + "\" must be an integer");
    return v.get<std::int64_t>();
}

} // namespace

PrimeSpectrumConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw config_error("config document must be a JSON object");

    const json& group = require_key(doc, "group", "");
    if (!group.is_object()) throw config_error("key \"group\" must be an object");
    std::int64_t free_rank = require_int(require_key(group, "free_rank", "group."), "group.free_rank");
    if (free_rank < 0) throw config_error("key \"group.free_rank\" must be >= 0");
    const json& torsion = require_key(group, "torsion", "group.");
    if (!torsion.is_array()) throw config_error("key \"group.torsion\" must be a list of integers");
    std::vector<std::int64_t> orders;
    for (std::size_t j = 0; j < torsion.size(); ++j) {
        std::int64_t n = require_int(torsion[j], "group.torsion[" + std::to_string(j) + "]");
        if (n < 2) {
            throw config_error("key \"group.torsion[" + std::to_string(j) + "]\" must be >= 2, got " +
                               std::to_string(n));
        }
        orders.push_back(n);
    }
    CyclicDecomposition g(static_cast<std::size_t>(free_rank), std::move(orders));

    const json& slots = require_key(doc, "slots", "");
    if (!slots.is_array()) throw config_error("key \"slots\" must be a list");
    std::vector<SlotSpec> specs;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const std::string where = "slots[" + std::to_string(i) + "].";
        const json& slot = slots[i];
        if (!slot.is_object()) throw config_error("key \"slots[" + std::to_string(i) + "]\" must be an object");
        const json& cls = require_key(slot, "class", where);
        if (!cls.is_array()) throw config_error("key \"" + where + "class\" must be a list of integers");
        std::vector<std::int64_t> coords;
        for (std::size_t k = 0; k < cls.size(); ++k) {
            coords.push_back(require_int(cls[k], where + "class[" + std::to_string(k) + "]"));
        }
        GroupElement e;
        try {
            e = g.element(coords);
        } catch (const structural_error& ex) {
            throw config_error("key \"" + where + "class\": " + ex.what());
        }
        std::optional<std::uint32_t> count;
        const json& cnt = require_key(slot, "count", where);
        if (cnt.is_string()) {
            if (cnt.get<std::string>() != "unbounded") {
                throw config_error("key \"" + where + "count\" must be a positive integer or \"unbounded\"");
            }
        } else {
            std::int64_t c = require_int(cnt, where + "count");
            if (c < 1) throw config_error("key \"" + where + "count\" must be >= 1");
            count = static_cast<std::uint32_t>(c);
        }
        specs.push_back({std::move(e), count});
    }

    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw config_error("key \"name\" must be a string");
        name = it->get<std::string>();
    }
    bool faithful = true;
    if (auto it = doc.find("faithful"); it != doc.end()) {
        if (!it->is_boolean()) throw config_error("key \"faithful\" must be a boolean");
        faithful = it->get<bool>();
    }

    try {
        return PrimeSpectrumConfig(std::move(g), std::move(specs), std::move(name), faithful);
    } catch (const structural_error& ex) {
        throw config_error(std::string("invalid config: ") + ex.what());
    }
}

PrimeSpectrumConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw config_error("config is not valid JSON at byte " + std::to_string(ex.byte) + ": " + ex.what());
    }
    return parse_config(doc);
}

PrimeSpectrumConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

json config_to_json(const PrimeSpectrumConfig& cfg) {
    json doc;
    if (!cfg.name().empty()) doc["name"] = cfg.name();
    doc["faithful"] = cfg.faithful();
    json torsion = json::array();
    for (auto n : cfg.group().torsion_orders()) torsion.push_back(n);
    doc["group"] = {{"free_rank", cfg.group().free_rank()}, {"torsion", torsion}};
    json slots = json::array();
    for (const auto& s : cfg.slots()) {
        json cls = json::array();
        for (const auto& c : s.cls.free) {
            if (c < std::numeric_limits<std::int64_t>::min() || c > std::numeric_limits<std::int64_t>::max()) {
                throw config_error("free coordinate too large to serialize");
            }
            cls.push_back(c.convert_to<std::int64_t>());
        }
        for (auto c : s.cls.torsion) cls.push_back(c);
        json slot;
        slot["class"] = cls;
        if (s.count) {
            slot["count"] = *s.count;
        } else {
            slot["count"] = "unbounded";
        }
        slots.push_back(slot);
    }
    doc["slots"] = slots;
    return doc;
}

json profile_to_json(const DivisorProfile& p) {
    json entries = json::array();
    for (const auto& e : p.entries()) {
        entries.push_back({{"slot", e.prime.slot}, {"ordinal", e.prime.ordinal}, {"exp", e.exp}});
    }
    return {{"entries", entries}, {"display", p.str()}};
}

DivisorProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw config_error("profile must be an object with an \"entries\" list");
    }
    std::vector<ProfileEntry> entries;
    for (const auto& e : j["entries"]) {
        PrimeId id{e.at("slot").get<std::uint32_t>(), e.at("ordinal").get<std::uint32_t>()};
        entries.push_back({id, e.at("exp").get<std::int64_t>()});
    }
    return DivisorProfile::from_entries(std::move(entries));
}

} // namespace idpd
