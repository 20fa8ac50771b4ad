#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quest/ising.hpp"
#include "quest/qubo.hpp"

namespace quest {

// One gamma/beta pair per layer. layers() validates that both vectors have
// the same nonzero length.
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    int layers() const;
};

using StateVector = std::vector<std::complex<double>>;

// energies[z] = diagonal Hamiltonian value of basis state z, where bit i of
// the index is the value of qubit i.
using EnergyTable = std::vector<double>;

// Hard cap on simulated qubits. Defaults to 24; the QUEST_GUARD_QUBITS
// environment variable overrides it (must parse as a positive integer).
int qubit_guard();

EnergyTable precompute_energies(const IsingHamiltonian& ham);

// Statevector QAOA circuit: uniform superposition, then per layer the
// diagonal phase exp(-i * gamma * E(z)) followed by the transverse mixer
// exp(-i * beta * X) on every qubit. O(p * D * 2^D) amplitude updates.
StateVector evolve(const EnergyTable& energies, const QaoaParams& params);

double expectation(const StateVector& psi, const EnergyTable& energies);

// Basis index -> bitstring with qubit 0 as the leftmost character.
std::string index_to_bits(std::uint64_t z, int n_qubits);

// Multinomial measurement of |psi|^2, byte-identical per seed.
std::map<std::string, std::uint64_t> sample(const StateVector& psi, std::uint64_t shots,
                                            std::uint64_t seed);

struct OptimizationResult {
    QaoaParams params;
    double value = 0;
};

// Exhaustive scan of the inclusive lattice [0, pi] x [0, pi] with
// grid_points values per axis (>= 2). Defined for p = 1 only; deeper
// circuits go through nelder_mead seeded from a single-layer result. Ties go
// to the smallest gamma, then the smallest beta.
OptimizationResult grid_search(const EnergyTable& energies, int p, int grid_points);

// Derivative-free Nelder-Mead over the flattened (gammas, betas) vector.
// Standard reflection/expansion/contraction/shrink coefficients
// (1, 2, 0.5, 0.5); stops when both the simplex diameter and the value
// spread drop below tol, or after max_iters iterations. The best vertex
// value never increases from one iteration to the next.
OptimizationResult nelder_mead(const std::function<double(const QaoaParams&)>& objective,
                               const QaoaParams& init, int max_iters, double tol);

enum class Strategy {
    kGrid,        // p = 1 only
    kGridNm,      // p = 1 grid seed, replicated across layers, then refined
    kTransferNm,  // caller-supplied donor angles, adapted to p, then refined
};

Strategy strategy_from_name(const std::string& name);
const char* strategy_name(Strategy s);

struct QaoaOptions {
    int layers = 4;
    Strategy strategy = Strategy::kGridNm;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    int grid_points = 21;
    int nm_max_iters = 400;
    double nm_tol = 1e-6;
    // Extra Nelder-Mead runs from the incumbent after the first converges.
    // The simplex tends to collapse on these periodic landscapes; a fresh
    // simplex recovers depth the first pass leaves on the table. Stops early
    // once a restart fails to improve the value.
    int nm_restarts = 5;
    std::optional<QaoaParams> transfer_params;  // required for kTransferNm
    std::optional<QaoaParams> fixed_params;     // skip optimization entirely
};

struct QaoaResult {
    std::map<std::string, std::uint64_t> counts;
    std::string best_bitstring;  // most frequent sample, ties to lex smallest
    QaoaParams params;
    double expected_energy = 0;  // <H> rescaled back to the QUBO energy scale
    double alpha = 1;            // normalization factor that was applied
};

// Full pipeline: QUBO -> Ising -> normalize -> optimize angles (per the
// strategy) -> evolve -> sample. The qubit guard applies to q.n_vars().
QaoaResult run_qaoa(const QuboMatrix& q, const QaoaOptions& opt);

} // namespace quest
