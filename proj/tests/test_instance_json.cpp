#include <string>

#include <doctest.h>
#include <json.hpp>

#include "quest/errors.hpp"
#include "quest/generator.hpp"
#include "quest/instance_json.hpp"

using namespace quest;

namespace {

nlohmann::json sample_doc() {
    return nlohmann::json::parse(R"({
        "segments": [{"id": 0, "length_km": 12.5}],
        "surfers": [{
            "id": 0, "class": 2, "pref_speed_kmh": 100.0, "speed_flex_kmh": 10.0,
            "depart_min": 30.0, "time_flex_min": 30.0,
            "seg_distances_km": [5.0], "seg_lengths_km": [12.5]
        }],
        "breakers": [{
            "id": 0, "class": 4, "speed_kmh": 110.0, "depart_min": 40.0,
            "seg_distances_km": [6.0]
        }],
        "penalties": {"lambda1": 1000.0, "lambda2": 1000.0, "lambda3": 650000.0},
        "delta_window_min": 45.0
    })");
}

} // namespace

TEST_CASE("instance json round-trip") {
    const auto inst = generate_instance(4, 99);
    const auto text = instance_to_json(inst);
    const auto back = instance_from_json(text);
    CHECK(instance_to_json(back) == text);
    CHECK(back.num_pairs() == 4);
    CHECK(back.lambda3 == inst.lambda3);
    CHECK(back.surfers[2].pref_speed == inst.surfers[2].pref_speed);
    CHECK(back.breakers[3].seg_distances == inst.breakers[3].seg_distances);
}

TEST_CASE("instance json field parsing") {
    const auto inst = instance_from_json(sample_doc().dump());
    CHECK(inst.num_pairs() == 1);
    CHECK(inst.surfers[0].cls.value() == 2);
    CHECK(inst.breakers[0].speed == 110.0);
    CHECK(inst.delta_window == 45.0);
    CHECK(inst.lambda3 == 650000.0);
}

TEST_CASE("instance json rejects unknown keys") {
    SUBCASE("top level") {
        auto doc = sample_doc();
        doc["surprise"] = 1;
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
    SUBCASE("inside a surfer") {
        auto doc = sample_doc();
        doc["surfers"][0]["nickname"] = "zoom";
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
    SUBCASE("inside penalties") {
        auto doc = sample_doc();
        doc["penalties"]["lambda4"] = 5;
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
}

TEST_CASE("instance json rejects malformed documents") {
    SUBCASE("missing key") {
        auto doc = sample_doc();
        doc.erase("delta_window_min");
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
    SUBCASE("segment array length mismatch") {
        auto doc = sample_doc();
        doc["surfers"][0]["seg_distances_km"] = {1.0, 2.0};
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
    SUBCASE("class out of range") {
        auto doc = sample_doc();
        doc["breakers"][0]["class"] = 7;
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
    SUBCASE("wrong type") {
        auto doc = sample_doc();
        doc["surfers"][0]["pref_speed_kmh"] = "fast";
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(instance_from_json("QUBO 1 0"), ParseError);
    }
    SUBCASE("semantic violations surface as parse errors") {
        auto doc = sample_doc();
        doc["breakers"][0]["speed_kmh"] = -3.0;
        CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
    }
}
