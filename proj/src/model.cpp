#include "quest/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace quest {

VehicleClass::VehicleClass(int value) : value_(value) {
    if (value < 1 || value > 5)
        throw std::domain_error("vehicle class must be in [1, 5], got " + std::to_string(value));
}

namespace {

void check_segment_arrays(const std::string& who, int id, std::size_t got, std::size_t want) {
    if (got != want)
        throw std::invalid_argument(who + " " + std::to_string(id) + " has " +
                                    std::to_string(got) + " segment entries, expected " +
                                    std::to_string(want));
}

void check_nonnegative(const std::string& what, double v) {
    if (v < 0 || !std::isfinite(v))
        throw std::invalid_argument(what + " must be finite and nonnegative");
}

void check_positive(const std::string& what, double v) {
    if (v <= 0 || !std::isfinite(v))
        throw std::invalid_argument(what + " must be finite and positive");
}

} // namespace

void Instance::validate() const {
    if (surfers.empty() || breakers.empty())
        throw std::invalid_argument("instance needs at least one surfer and one breaker");
    if (segments.empty())
        throw std::invalid_argument("instance needs at least one segment");
    if (segments.size() == 1 && surfers.size() != breakers.size())
        throw std::invalid_argument(
            "single-segment instances need matching surfer and breaker counts");

    const auto k = segments.size();
    for (const auto& seg : segments)
        check_positive("segment length", seg.length_km);
    for (const auto& s : surfers) {
        check_positive("surfer pref_speed", s.pref_speed);
        check_nonnegative("surfer speed_flex", s.speed_flex);
        check_nonnegative("surfer depart_time", s.depart_time);
        check_nonnegative("surfer time_flex", s.time_flex);
        check_segment_arrays("surfer", s.id, s.seg_distances.size(), k);
        check_segment_arrays("surfer", s.id, s.seg_lengths.size(), k);
        for (double d : s.seg_distances) check_nonnegative("surfer segment distance", d);
        for (double l : s.seg_lengths) check_positive("surfer segment length", l);
    }
    for (const auto& b : breakers) {
        check_positive("breaker speed", b.speed);
        check_nonnegative("breaker depart_time", b.depart_time);
        check_segment_arrays("breaker", b.id, b.seg_distances.size(), k);
        for (double d : b.seg_distances) check_nonnegative("breaker segment distance", d);
    }
    check_nonnegative("lambda1", lambda1);
    check_nonnegative("lambda2", lambda2);
    check_positive("lambda3", lambda3);
    check_nonnegative("delta_window", delta_window);
}

MultiAssignment::MultiAssignment(int surfers, int breakers, int segments)
    : S_(surfers), B_(breakers), K_(segments) {
    if (surfers < 1 || breakers < 1 || segments < 1)
        throw std::invalid_argument("assignment dimensions must be positive");
    x_.assign(static_cast<std::size_t>(S_) * B_ * K_, 0);
}

int MultiAssignment::index(int s, int b, int k) const {
    if (s < 0 || s >= S_ || b < 0 || b >= B_ || k < 0 || k >= K_)
        throw std::out_of_range("assignment index out of range");
    return (s * B_ + b) * K_ + k;
}

bool MultiAssignment::get(int s, int b, int k) const { return x_[index(s, b, k)] != 0; }

void MultiAssignment::set(int s, int b, int k, bool value) { x_[index(s, b, k)] = value ? 1 : 0; }

double efficiency(int class_diff) {
    if (class_diff < -4 || class_diff > 4)
        throw std::domain_error("class difference must be in [-4, 4], got " +
                                std::to_string(class_diff));
    return (class_diff + 4) / 24.0;
}

double time_penalty(const Surfer& s, const Breaker& b) {
    const double gap = std::abs(s.depart_time - b.depart_time);
    return gap > s.time_flex / 2.0 ? gap : 0.0;
}

double velocity_penalty(const Surfer& s, const Breaker& b) {
    const double gap = std::abs(s.pref_speed - b.speed);
    return gap > s.speed_flex / 2.0 ? gap : 0.0;
}

double pair_weight(const Surfer& s, const Breaker& b, double lambda1, double lambda2) {
    const double f = efficiency(b.cls.value() - s.cls.value());
    return s.cls.value() * b.speed * b.speed * (1.0 - f) +
           lambda1 * time_penalty(s, b) + lambda2 * velocity_penalty(s, b);
}

double segment_weight(const Surfer& s, const Breaker& b, int k) {
    if (k < 0 || k >= static_cast<int>(s.seg_lengths.size()))
        throw std::out_of_range("segment index out of range");
    const double f = efficiency(b.cls.value() - s.cls.value());
    return s.cls.value() * b.speed * b.speed * (1.0 - f) * s.seg_lengths[k];
}

double arrival_time(double distance_km, double speed_kmh) {
    if (speed_kmh <= 0)
        throw std::domain_error("speed must be positive");
    if (distance_km < 0)
        throw std::domain_error("distance must be nonnegative");
    return distance_km / speed_kmh;
}

bool timing_feasible(const Surfer& s, const Breaker& b, int k, double delta_window_min) {
    if (k < 0 || k >= static_cast<int>(s.seg_distances.size()) ||
        k >= static_cast<int>(b.seg_distances.size()))
        throw std::out_of_range("segment index out of range");
    const double t_s = arrival_time(s.seg_distances[k], s.pref_speed);
    const double t_b = arrival_time(b.seg_distances[k], b.speed);
    // Arrival times are hours; the window is minutes. Convert once, here.
    return std::abs(t_s - t_b) * 60.0 <= delta_window_min;
}

double handover_coeff(const Breaker& b, const Breaker& bp, int k, int kp) {
    if (std::abs(k - kp) != 1)
        throw std::domain_error("handover is defined for adjacent segments only");
    if (k < 0 || k >= static_cast<int>(b.seg_distances.size()) ||
        kp < 0 || kp >= static_cast<int>(bp.seg_distances.size()))
        throw std::out_of_range("segment index out of range");
    const double t = arrival_time(b.seg_distances[k], b.speed);
    const double tp = arrival_time(bp.seg_distances[kp], bp.speed);
    return 1.0 + std::abs(t - tp);
}

namespace {

void check_dims(const Instance& inst, const MultiAssignment& x) {
    if (x.surfers() != inst.num_pairs() || x.breakers() != inst.num_breakers() ||
        x.segments() != inst.num_segments())
        throw std::invalid_argument("assignment dimensions do not match instance");
}

} // namespace

double multi_objective(const Instance& inst, const MultiAssignment& x) {
    check_dims(inst, x);
    const int n_s = inst.num_pairs();
    const int n_b = inst.num_breakers();
    const int k_count = inst.num_segments();

    double total = 0;
    for (int s = 0; s < n_s; ++s)
        for (int b = 0; b < n_b; ++b)
            for (int k = 0; k < k_count; ++k)
                if (x.get(s, b, k))
                    total += segment_weight(inst.surfers[s], inst.breakers[b], k);

    for (int s = 0; s < n_s; ++s)
        for (int k = 0; k + 1 < k_count; ++k)
            for (int b = 0; b < n_b; ++b) {
                if (!x.get(s, b, k)) continue;
                for (int bp = 0; bp < n_b; ++bp)
                    if (x.get(s, bp, k + 1))
                        total += handover_coeff(inst.breakers[b], inst.breakers[bp], k, k + 1);
            }
    return total;
}

FeasibilityReport feasible(const Instance& inst, const MultiAssignment& x) {
    check_dims(inst, x);
    const int n_s = inst.num_pairs();
    const int n_b = inst.num_breakers();
    const int k_count = inst.num_segments();

    FeasibilityReport report;
    auto flag = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    for (int k = 0; k < k_count; ++k) {
        for (int s = 0; s < n_s; ++s) {
            int count = 0;
            for (int b = 0; b < n_b; ++b) count += x.get(s, b, k);
            if (count != 1)
                flag("surfer " + std::to_string(inst.surfers[s].id) + " has " +
                     std::to_string(count) + " breakers on segment " + std::to_string(k));
        }
        for (int b = 0; b < n_b; ++b) {
            int count = 0;
            for (int s = 0; s < n_s; ++s) count += x.get(s, b, k);
            if (count > 1)
                flag("breaker " + std::to_string(inst.breakers[b].id) + " has " +
                     std::to_string(count) + " surfers on segment " + std::to_string(k));
        }
        for (int s = 0; s < n_s; ++s)
            for (int b = 0; b < n_b; ++b)
                if (x.get(s, b, k) &&
                    !timing_feasible(inst.surfers[s], inst.breakers[b], k, inst.delta_window))
                    flag("surfer " + std::to_string(inst.surfers[s].id) + " and breaker " +
                         std::to_string(inst.breakers[b].id) + " miss the arrival window on segment " +
                         std::to_string(k));
    }
    return report;
}

std::vector<std::vector<double>> weight_matrix(const Instance& inst) {
    const int n_s = inst.num_pairs();
    const int n_b = inst.num_breakers();
    std::vector<std::vector<double>> w(n_s, std::vector<double>(n_b, 0.0));
    for (int s = 0; s < n_s; ++s)
        for (int b = 0; b < n_b; ++b)
            w[s][b] = pair_weight(inst.surfers[s], inst.breakers[b], inst.lambda1, inst.lambda2);
    return w;
}

} // namespace quest
