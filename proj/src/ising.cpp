#include "quest/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quest {

double IsingHamiltonian::max_abs_coefficient() const {
    double m = 0;
    for (double v : h) m = std::max(m, std::abs(v));
    for (const auto& c : couplings) m = std::max(m, std::abs(c.value));
    return m;
}

IsingHamiltonian qubo_to_ising(const QuboMatrix& q) {
    q.require_symmetric();
    const int n = q.n_vars();

    IsingHamiltonian ham;
    ham.n_spins = n;
    ham.h.assign(n, 0.0);

    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) row += q.at(i, j) + q.at(j, i);
        ham.h[i] = -q.at(i, i) / 2.0 - row / 4.0;
        ham.offset += q.at(i, i) / 2.0;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double coupling = (q.at(i, j) + q.at(j, i)) / 4.0;
            ham.offset += coupling;
            if (coupling != 0.0)
                ham.couplings.push_back({i, j, coupling});
        }
    return ham;
}

double ising_energy(const IsingHamiltonian& ham, const std::vector<int>& spins) {
    if (static_cast<int>(spins.size()) != ham.n_spins)
        throw std::domain_error("spin vector length does not match Hamiltonian");
    for (int z : spins)
        if (z != 1 && z != -1)
            throw std::domain_error("spins must be +1 or -1");
    double e = ham.offset;
    for (int i = 0; i < ham.n_spins; ++i) e += ham.h[i] * spins[i];
    for (const auto& c : ham.couplings) e += c.value * spins[c.i] * spins[c.j];
    return e;
}

NormalizedIsing normalize(const IsingHamiltonian& ham) {
    const double m = ham.max_abs_coefficient();
    if (m == 0)
        throw std::domain_error("cannot normalize an all-zero Hamiltonian");
    NormalizedIsing out;
    out.alpha = 1.0 / m;
    out.ham = ham;
    for (double& v : out.ham.h) v *= out.alpha;
    for (auto& c : out.ham.couplings) c.value *= out.alpha;
    out.ham.offset *= out.alpha;
    return out;
}

} // namespace quest
