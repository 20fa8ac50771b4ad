#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quest {

// Vehicle size class on the 1..5 scale used throughout the cost model
// (1 = small passenger car, 5 = full-sized truck). Construction rejects
// anything outside that range.
class VehicleClass {
public:
    explicit VehicleClass(int value);
    int value() const { return value_; }

    friend bool operator==(VehicleClass a, VehicleClass b) { return a.value_ == b.value_; }

private:
    int value_;
};

// A drafting vehicle ("windsurfer"): wants to ride in some windbreaker's
// slipstream. Speeds are km/h, times are minutes past the common epoch,
// distances are km. seg_distances[k] is the distance the surfer covers to
// reach segment k; seg_lengths[k] is how much of segment k it actually uses.
struct Surfer {
    int id = 0;
    VehicleClass cls{1};
    double pref_speed = 0;
    double speed_flex = 0;
    double depart_time = 0;
    double time_flex = 0;
    std::vector<double> seg_distances;
    std::vector<double> seg_lengths;
};

// A lead vehicle ("windbreaker") that provides the slipstream.
struct Breaker {
    int id = 0;
    VehicleClass cls{1};
    double speed = 0;
    double depart_time = 0;
    std::vector<double> seg_distances;
};

struct Segment {
    int id = 0;
    double length_km = 0;
};

// One matching problem: equal-sized surfer/breaker sets over K highway
// segments, plus the penalty configuration.
struct Instance {
    std::vector<Segment> segments;
    std::vector<Surfer> surfers;
    std::vector<Breaker> breakers;
    double lambda1 = 1000;        // departure-window penalty scale
    double lambda2 = 1000;        // speed-window penalty scale
    double lambda3 = 650000;      // one-to-one constraint penalty
    double delta_window = 45;     // max admissible arrival gap, minutes

    int num_pairs() const { return static_cast<int>(surfers.size()); }
    int num_breakers() const { return static_cast<int>(breakers.size()); }
    int num_segments() const { return static_cast<int>(segments.size()); }

    // Structural invariants: nonempty vehicle sets, K >= 1, per-vehicle
    // segment arrays sized K, positive speeds and lambda3, nonnegative
    // everything else. Single-segment instances additionally need
    // |surfers| == |breakers| (one-to-one matching). Throws
    // std::invalid_argument.
    void validate() const;
};

// Dense 0/1 decision tensor x_{s,b,k}: surfer s drafts behind breaker b on
// segment k.
class MultiAssignment {
public:
    MultiAssignment(int surfers, int breakers, int segments);

    bool get(int s, int b, int k) const;
    void set(int s, int b, int k, bool value);

    int surfers() const { return S_; }
    int breakers() const { return B_; }
    int segments() const { return K_; }

private:
    int index(int s, int b, int k) const;

    int S_, B_, K_;
    std::vector<std::uint8_t> x_;
};

// Drag-reduction efficiency as a function of the class difference
// d = breaker_class - surfer_class, d in [-4, 4]. Linear ramp: a surfer
// tucked behind a much larger vehicle saves the most.
double efficiency(int class_diff);

// Soft-window penalties: zero inside half the surfer's flex window,
// otherwise the absolute gap. Units: minutes / km/h respectively.
double time_penalty(const Surfer& s, const Breaker& b);
double velocity_penalty(const Surfer& s, const Breaker& b);

// Single-segment matching weight
//   c_s * V_b^2 * (1 - f(C_b - c_s)) + lambda1 * time_penalty + lambda2 * velocity_penalty
double pair_weight(const Surfer& s, const Breaker& b, double lambda1, double lambda2);

// Per-segment drag cost (no window terms): c_s * V_b^2 * (1 - f) * l_{s,k}.
double segment_weight(const Surfer& s, const Breaker& b, int k);

// Hours to cover distance_km at speed_kmh. speed must be > 0.
double arrival_time(double distance_km, double speed_kmh);

// True when surfer and breaker reach segment k within delta_window minutes
// of each other (inclusive), both departing at their scheduled times.
bool timing_feasible(const Surfer& s, const Breaker& b, int k, double delta_window_min);

// Handover friction between consecutive segments: 1 + |T_{b,k} - T_{b',k'}|
// where T are arrival times in hours. Requires |k - k'| == 1.
double handover_coeff(const Breaker& b, const Breaker& bp, int k, int kp);

// Full multi-segment objective: sum of chosen segment weights plus handover
// coefficients between consecutive chosen segments of each surfer.
double multi_objective(const Instance& inst, const MultiAssignment& x);

struct FeasibilityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks surfer uniqueness (exactly one breaker per surfer per segment),
// breaker capacity (at most one surfer per breaker per segment), and the
// arrival-gap window for every chosen pair.
FeasibilityReport feasible(const Instance& inst, const MultiAssignment& x);

// All pair weights: w[s][b], |surfers| rows by |breakers| columns.
std::vector<std::vector<double>> weight_matrix(const Instance& inst);

} // namespace quest
