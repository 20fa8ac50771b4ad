#include "quest/instance_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "quest/errors.hpp"

namespace quest {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object())
        throw ParseError(where + " must be a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) { known = true; break; }
        if (!known)
            throw ParseError("unknown key \"" + item.key() + "\" in " + where);
    }
    for (const char* key : allowed)
        if (!obj.contains(key))
            throw ParseError("missing key \"" + std::string(key) + "\" in " + where);
}

double number_at(const json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ParseError("\"" + std::string(key) + "\" in " + where + " must be a number");
    return v.get<double>();
}

int int_at(const json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw ParseError("\"" + std::string(key) + "\" in " + where + " must be an integer");
    return v.get<int>();
}

std::vector<double> number_array_at(const json& obj, const char* key, const std::string& where,
                                    std::size_t want) {
    const auto& v = obj.at(key);
    if (!v.is_array())
        throw ParseError("\"" + std::string(key) + "\" in " + where + " must be an array");
    if (v.size() != want)
        throw ParseError("\"" + std::string(key) + "\" in " + where + " must have " +
                         std::to_string(want) + " entries (one per segment), got " +
                         std::to_string(v.size()));
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw ParseError("\"" + std::string(key) + "\" in " + where +
                             " must contain numbers only");
        out.push_back(e.get<double>());
    }
    return out;
}

} // namespace

Instance instance_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    require_keys(doc, "instance", {"segments", "surfers", "breakers", "penalties",
                                   "delta_window_min"});

    Instance inst;

    const auto& segs = doc.at("segments");
    if (!segs.is_array() || segs.empty())
        throw ParseError("\"segments\" must be a non-empty array");
    for (const auto& s : segs) {
        require_keys(s, "segment", {"id", "length_km"});
        inst.segments.push_back({int_at(s, "id", "segment"),
                                 number_at(s, "length_km", "segment")});
    }
    const std::size_t k = inst.segments.size();

    const auto& surfers = doc.at("surfers");
    if (!surfers.is_array() || surfers.empty())
        throw ParseError("\"surfers\" must be a non-empty array");
    for (const auto& s : surfers) {
        require_keys(s, "surfer", {"id", "class", "pref_speed_kmh", "speed_flex_kmh",
                                   "depart_min", "time_flex_min", "seg_distances_km",
                                   "seg_lengths_km"});
        Surfer surfer;
        surfer.id = int_at(s, "id", "surfer");
        try {
            surfer.cls = VehicleClass(int_at(s, "class", "surfer"));
        } catch (const std::domain_error& e) {
            throw ParseError(e.what());
        }
        surfer.pref_speed = number_at(s, "pref_speed_kmh", "surfer");
        surfer.speed_flex = number_at(s, "speed_flex_kmh", "surfer");
        surfer.depart_time = number_at(s, "depart_min", "surfer");
        surfer.time_flex = number_at(s, "time_flex_min", "surfer");
        surfer.seg_distances = number_array_at(s, "seg_distances_km", "surfer", k);
        surfer.seg_lengths = number_array_at(s, "seg_lengths_km", "surfer", k);
        inst.surfers.push_back(std::move(surfer));
    }

    const auto& breakers = doc.at("breakers");
    if (!breakers.is_array() || breakers.empty())
        throw ParseError("\"breakers\" must be a non-empty array");
    for (const auto& b : breakers) {
        require_keys(b, "breaker", {"id", "class", "speed_kmh", "depart_min",
                                    "seg_distances_km"});
        Breaker breaker;
        breaker.id = int_at(b, "id", "breaker");
        try {
            breaker.cls = VehicleClass(int_at(b, "class", "breaker"));
        } catch (const std::domain_error& e) {
            throw ParseError(e.what());
        }
        breaker.speed = number_at(b, "speed_kmh", "breaker");
        breaker.depart_time = number_at(b, "depart_min", "breaker");
        breaker.seg_distances = number_array_at(b, "seg_distances_km", "breaker", k);
        inst.breakers.push_back(std::move(breaker));
    }

    const auto& pen = doc.at("penalties");
    require_keys(pen, "penalties", {"lambda1", "lambda2", "lambda3"});
    inst.lambda1 = number_at(pen, "lambda1", "penalties");
    inst.lambda2 = number_at(pen, "lambda2", "penalties");
    inst.lambda3 = number_at(pen, "lambda3", "penalties");
    inst.delta_window = number_at(doc, "delta_window_min", "instance");

    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return inst;
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    for (const auto& s : inst.segments)
        doc["segments"].push_back({{"id", s.id}, {"length_km", s.length_km}});
    for (const auto& s : inst.surfers)
        doc["surfers"].push_back({{"id", s.id},
                                  {"class", s.cls.value()},
                                  {"pref_speed_kmh", s.pref_speed},
                                  {"speed_flex_kmh", s.speed_flex},
                                  {"depart_min", s.depart_time},
                                  {"time_flex_min", s.time_flex},
                                  {"seg_distances_km", s.seg_distances},
                                  {"seg_lengths_km", s.seg_lengths}});
    for (const auto& b : inst.breakers)
        doc["breakers"].push_back({{"id", b.id},
                                   {"class", b.cls.value()},
                                   {"speed_kmh", b.speed},
                                   {"depart_min", b.depart_time},
                                   {"seg_distances_km", b.seg_distances}});
    doc["penalties"] = {{"lambda1", inst.lambda1},
                        {"lambda2", inst.lambda2},
                        {"lambda3", inst.lambda3}};
    doc["delta_window_min"] = inst.delta_window;
    return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_json(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << instance_to_json(inst);
}

} // namespace quest
