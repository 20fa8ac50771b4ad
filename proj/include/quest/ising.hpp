#pragma once

#include <vector>

#include "quest/qubo.hpp"

namespace quest {

// Diagonal Ising Hamiltonian
//   H(z) = sum_i h[i] * z_i + sum_{(i,j)} J_{ij} * z_i * z_j + offset,
// spins z_i in {-1, +1}, couplings stored strictly upper-triangular.
struct IsingHamiltonian {
    struct Coupling {
        int i = 0;
        int j = 0;
        double value = 0;
    };

    int n_spins = 0;
    std::vector<double> h;
    std::vector<Coupling> couplings;
    double offset = 0;

    // Largest magnitude over h and couplings; the offset does not count.
    double max_abs_coefficient() const;
};

// Substitutes x_i = (1 - z_i) / 2 into x^T Q x. With S_ij = Q_ij + Q_ji:
//   h[i]   = -Q_ii / 2 - sum_{j != i} S_ij / 4
//   J_ij   =  S_ij / 4                       (i < j)
//   offset =  sum_i Q_ii / 2 + sum_{i < j} S_ij / 4
// The QUBO's own constant offset is NOT folded in; callers track it
// separately. Requires a symmetric matrix (domain error otherwise).
IsingHamiltonian qubo_to_ising(const QuboMatrix& q);

double ising_energy(const IsingHamiltonian& ham, const std::vector<int>& spins);

struct NormalizedIsing {
    IsingHamiltonian ham;
    double alpha = 1;  // multiplier applied to every coefficient and the offset
};

// Rescales so the largest |h| / |J| magnitude becomes exactly 1. The offset
// is scaled by the same alpha but excluded from the maximum. An all-zero
// Hamiltonian cannot be normalized (domain error).
NormalizedIsing normalize(const IsingHamiltonian& ham);

} // namespace quest
