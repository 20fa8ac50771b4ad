#pragma once

#include <cstdint>

#include "quest/model.hpp"

namespace quest {

// Sampling ranges for synthetic instances. Defaults give highway-plausible
// fleets: mixed vehicle classes, 80..130 km/h cruise speeds, departures
// spread over two hours so a realistic share of pairs violates the soft
// windows while hard arrival-gap feasibility still holds.
struct GeneratorParams {
    double speed_min = 80;
    double speed_max = 130;
    double depart_window = 120;
    double speed_flex = 10;
    double time_flex = 30;
    double route_distance_max = 50;
    double segment_length_min = 5;
    double segment_length_max = 30;
    int segments = 1;
    double lambda1 = 1000;
    double lambda2 = 1000;
    double lambda3 = 650000;
    double delta_window = 45;
};

// Deterministic per (pairs, seed): the same call always produces the same
// instance, byte for byte once serialized.
Instance generate_instance(int pairs, std::uint64_t seed, const GeneratorParams& p = {});

} // namespace quest
