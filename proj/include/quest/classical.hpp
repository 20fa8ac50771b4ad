#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quest/model.hpp"
#include "quest/qubo.hpp"

namespace quest {

// A perfect matching on the single-segment problem: pairs[s] = b.
struct Matching {
    std::vector<int> pairs;
    double total_cost = 0;
};

// Exact O(n^3) assignment via Kuhn-Munkres with row/column potentials.
// Among cost-optimal matchings, returns the lexicographically smallest
// pairs vector (ties resolved toward smaller breaker indices for smaller
// surfer indices). cost must be square with finite entries.
Matching hungarian(const std::vector<std::vector<double>>& cost);

// Exhaustive permutation scan, same tie-break as hungarian(). n <= 10.
Matching brute_force_assignment(const std::vector<std::vector<double>>& cost);

enum class Solver { kHungarian, kBrute, kAnneal, kQaoa };

// Result of a QUBO-space solver. energy excludes the matrix offset;
// objective = energy + offset is the constrained matching cost.
struct SolveResult {
    BitVector x;
    double energy = 0;
    double objective = 0;
    Solver solver = Solver::kBrute;
};

// Scans all 2^n bit vectors in ascending integer order with x[0] as the most
// significant bit, so the first optimum found is the lexicographically
// smallest bitstring. Guard: n_vars <= 20 (SizeGuardError beyond).
SolveResult brute_force_qubo(const QuboMatrix& q);

struct AnnealSchedule {
    double t_start = 0;
    double t_end = 0;
    int sweeps = 0;
};

// t_start = max |Q_ij| (or 1 if the matrix is all zero), t_end = 1e-3 * t_start,
// sweeps = 200 * n_vars.
AnnealSchedule default_anneal_schedule(const QuboMatrix& q);

// Single-bit-flip Metropolis annealing with a geometric temperature ladder
// (one temperature per sweep, each sweep tries every bit once). Deterministic
// per seed. Returns the best state seen, with its energy recomputed exactly.
SolveResult simulated_annealing(const QuboMatrix& q, const AnnealSchedule& schedule,
                                std::uint64_t seed);

struct MultiSolution {
    MultiAssignment assignment;
    double cost = 0;
};

// Exhaustive search over per-segment injective surfer->breaker maps for the
// multi-segment objective, keeping only assignments that pass feasible().
// Empty optional when no feasible assignment exists. Guard: (number of
// injective maps)^K <= 1e6 candidates (SizeGuardError beyond).
std::optional<MultiSolution> brute_force_multi(const Instance& inst);

} // namespace quest
