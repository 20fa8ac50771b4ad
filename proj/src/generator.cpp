#include "quest/generator.hpp"

#include <random>
#include <stdexcept>

#include "rng_util.hpp"

namespace quest {

namespace {

double uniform_in(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * detail::uniform01(gen);
}

} // namespace

Instance generate_instance(int pairs, std::uint64_t seed, const GeneratorParams& p) {
    if (pairs < 1)
        throw std::invalid_argument("need at least one pair");
    if (p.segments < 1)
        throw std::invalid_argument("need at least one segment");
    if (!(p.speed_min > 0) || p.speed_max < p.speed_min ||
        p.segment_length_max < p.segment_length_min || !(p.segment_length_min > 0))
        throw std::invalid_argument("malformed generator ranges");

    std::mt19937_64 gen(seed);
    Instance inst;
    inst.lambda1 = p.lambda1;
    inst.lambda2 = p.lambda2;
    inst.lambda3 = p.lambda3;
    inst.delta_window = p.delta_window;

    for (int k = 0; k < p.segments; ++k)
        inst.segments.push_back(
            {k, uniform_in(gen, p.segment_length_min, p.segment_length_max)});

    for (int i = 0; i < pairs; ++i) {
        Surfer s;
        s.id = i;
        s.cls = VehicleClass(static_cast<int>(detail::uniform_below(gen, 5)) + 1);
        s.pref_speed = uniform_in(gen, p.speed_min, p.speed_max);
        s.speed_flex = p.speed_flex;
        s.depart_time = uniform_in(gen, 0, p.depart_window);
        s.time_flex = p.time_flex;
        for (int k = 0; k < p.segments; ++k) {
            s.seg_distances.push_back(uniform_in(gen, 0, p.route_distance_max));
            s.seg_lengths.push_back(inst.segments[k].length_km);
        }
        inst.surfers.push_back(std::move(s));
    }
    for (int i = 0; i < pairs; ++i) {
        Breaker b;
        b.id = i;
        b.cls = VehicleClass(static_cast<int>(detail::uniform_below(gen, 5)) + 1);
        b.speed = uniform_in(gen, p.speed_min, p.speed_max);
        b.depart_time = uniform_in(gen, 0, p.depart_window);
        for (int k = 0; k < p.segments; ++k)
            b.seg_distances.push_back(uniform_in(gen, 0, p.route_distance_max));
        inst.breakers.push_back(std::move(b));
    }

    inst.validate();
    return inst;
}

} // namespace quest
