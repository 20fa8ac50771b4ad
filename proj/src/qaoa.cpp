#include "quest/qaoa.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "quest/errors.hpp"
#include "rng_util.hpp"

namespace quest {

int QaoaParams::layers() const {
    if (gammas.empty() || gammas.size() != betas.size())
        throw std::domain_error("parameter vectors must have equal nonzero length");
    return static_cast<int>(gammas.size());
}

int qubit_guard() {
    const char* env = std::getenv("QUEST_GUARD_QUBITS");
    if (!env || !*env) return 24;
    int value = 0;
    auto res = std::from_chars(env, env + std::char_traits<char>::length(env), value);
    if (res.ec != std::errc() || *res.ptr != '\0' || value < 1)
        throw std::domain_error("QUEST_GUARD_QUBITS must be a positive integer");
    return value;
}

EnergyTable precompute_energies(const IsingHamiltonian& ham) {
    if (ham.n_spins < 1)
        throw std::domain_error("Hamiltonian has no spins");
    if (ham.n_spins > qubit_guard())
        throw SizeGuardError("energy table needs " + std::to_string(ham.n_spins) +
                             " qubits, guard is " + std::to_string(qubit_guard()));

    const std::uint64_t dim = std::uint64_t{1} << ham.n_spins;
    EnergyTable energies(dim);
    for (std::uint64_t z = 0; z < dim; ++z) {
        double e = ham.offset;
        for (int i = 0; i < ham.n_spins; ++i)
            e += ham.h[i] * (1.0 - 2.0 * ((z >> i) & 1));
        for (const auto& c : ham.couplings) {
            const int parity = static_cast<int>(((z >> c.i) ^ (z >> c.j)) & 1);
            e += c.value * (1.0 - 2.0 * parity);
        }
        energies[z] = e;
    }
    return energies;
}

namespace {

int qubits_for(std::size_t dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("state dimension must be a power of two >= 2");
    int d = 0;
    while ((std::size_t{1} << d) < dim) ++d;
    return d;
}

} // namespace

StateVector evolve(const EnergyTable& energies, const QaoaParams& params) {
    const int p = params.layers();
    const int n_qubits = qubits_for(energies.size());
    const std::uint64_t dim = energies.size();

    StateVector psi(dim, std::complex<double>(std::pow(2.0, -0.5 * n_qubits), 0.0));

    for (int layer = 0; layer < p; ++layer) {
        const double gamma = params.gammas[layer];
        for (std::uint64_t z = 0; z < dim; ++z)
            psi[z] *= std::complex<double>(std::cos(gamma * energies[z]),
                                           -std::sin(gamma * energies[z]));

        const double c = std::cos(params.betas[layer]);
        const std::complex<double> mis(0.0, -std::sin(params.betas[layer]));
        for (int q = 0; q < n_qubits; ++q) {
            const std::uint64_t bit = std::uint64_t{1} << q;
            for (std::uint64_t z = 0; z < dim; ++z) {
                if (z & bit) continue;
                const auto a0 = psi[z];
                const auto a1 = psi[z | bit];
                psi[z] = c * a0 + mis * a1;
                psi[z | bit] = c * a1 + mis * a0;
            }
        }
    }
    return psi;
}

double expectation(const StateVector& psi, const EnergyTable& energies) {
    if (psi.size() != energies.size())
        throw std::invalid_argument("state and energy table sizes differ");
    double e = 0;
    for (std::size_t z = 0; z < psi.size(); ++z)
        e += std::norm(psi[z]) * energies[z];
    return e;
}

std::string index_to_bits(std::uint64_t z, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int i = 0; i < n_qubits; ++i)
        s[i] = static_cast<char>('0' + ((z >> i) & 1));
    return s;
}

std::map<std::string, std::uint64_t> sample(const StateVector& psi, std::uint64_t shots,
                                            std::uint64_t seed) {
    if (psi.empty())
        throw std::invalid_argument("empty state");
    const int n_qubits = qubits_for(psi.size());

    std::vector<double> cumulative(psi.size());
    double total = 0;
    for (std::size_t z = 0; z < psi.size(); ++z) {
        total += std::norm(psi[z]);
        cumulative[z] = total;
    }

    std::mt19937_64 gen(seed);
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = detail::uniform01(gen) * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto z = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                     static_cast<std::ptrdiff_t>(psi.size()) - 1));
        ++counts[index_to_bits(z, n_qubits)];
    }
    return counts;
}

OptimizationResult grid_search(const EnergyTable& energies, int p, int grid_points) {
    if (p != 1)
        throw std::domain_error("grid search is defined for a single layer; deeper "
                                "circuits are seeded via nelder_mead");
    if (grid_points < 2)
        throw std::domain_error("grid search needs at least 2 points per axis");

    const double step = std::numbers::pi / (grid_points - 1);
    OptimizationResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (int gi = 0; gi < grid_points; ++gi) {
        const double gamma = gi * step;
        for (int bi = 0; bi < grid_points; ++bi) {
            const double beta = bi * step;
            QaoaParams params{{gamma}, {beta}};
            const double value = expectation(evolve(energies, params), energies);
            if (value < best.value) {
                best.value = value;
                best.params = params;
            }
        }
    }
    return best;
}

namespace {

QaoaParams unflatten(const std::vector<double>& x) {
    const std::size_t p = x.size() / 2;
    QaoaParams params;
    params.gammas.assign(x.begin(), x.begin() + p);
    params.betas.assign(x.begin() + p, x.end());
    return params;
}

} // namespace

OptimizationResult nelder_mead(const std::function<double(const QaoaParams&)>& objective,
                               const QaoaParams& init, int max_iters, double tol) {
    init.layers();  // validates the shape
    if (max_iters < 1)
        throw std::domain_error("max_iters must be positive");
    if (tol <= 0)
        throw std::domain_error("tol must be positive");

    std::vector<double> x0;
    x0.insert(x0.end(), init.gammas.begin(), init.gammas.end());
    x0.insert(x0.end(), init.betas.begin(), init.betas.end());
    const std::size_t dim = x0.size();

    auto eval = [&](const std::vector<double>& x) { return objective(unflatten(x)); };

    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (std::size_t k = 0; k < dim; ++k) {
        auto x = x0;
        x[k] += x[k] == 0.0 ? 0.25 : 0.25 * std::abs(x[k]);
        simplex.push_back({std::move(x), 0});
        simplex.back().f = eval(simplex.back().x);
    }

    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    for (int iter = 0; iter < max_iters; ++iter) {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

        double f_spread = simplex.back().f - simplex.front().f;
        double x_spread = 0;
        for (std::size_t k = 0; k < dim; ++k)
            for (const auto& v : simplex)
                x_spread = std::max(x_spread, std::abs(v.x[k] - simplex.front().x[k]));
        if (f_spread < tol && x_spread < tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i)
            for (std::size_t k = 0; k < dim; ++k)
                centroid[k] += simplex[i].x[k] / static_cast<double>(dim);

        auto point_at = [&](double coeff) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k)
                x[k] = centroid[k] + coeff * (centroid[k] - simplex.back().x[k]);
            return x;
        };

        auto reflected = point_at(kReflect);
        const double f_r = eval(reflected);
        if (f_r < simplex.front().f) {
            auto expanded = point_at(kExpand);
            const double f_e = eval(expanded);
            if (f_e < f_r)
                simplex.back() = {std::move(expanded), f_e};
            else
                simplex.back() = {std::move(reflected), f_r};
            continue;
        }
        if (f_r < simplex[simplex.size() - 2].f) {
            simplex.back() = {std::move(reflected), f_r};
            continue;
        }
        auto contracted = point_at(f_r < simplex.back().f ? kContract : -kContract);
        const double f_c = eval(contracted);
        if (f_c < std::min(f_r, simplex.back().f)) {
            simplex.back() = {std::move(contracted), f_c};
            continue;
        }
        for (std::size_t i = 1; i < simplex.size(); ++i) {
            for (std::size_t k = 0; k < dim; ++k)
                simplex[i].x[k] = simplex.front().x[k] +
                                  kShrink * (simplex[i].x[k] - simplex.front().x[k]);
            simplex[i].f = eval(simplex[i].x);
        }
    }

    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    OptimizationResult out;
    out.params = unflatten(simplex.front().x);
    out.value = simplex.front().f;
    return out;
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "grid") return Strategy::kGrid;
    if (name == "grid+nm") return Strategy::kGridNm;
    if (name == "transfer+nm") return Strategy::kTransferNm;
    throw std::domain_error("unknown strategy \"" + name + "\"");
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::kGrid: return "grid";
        case Strategy::kGridNm: return "grid+nm";
        case Strategy::kTransferNm: return "transfer+nm";
    }
    throw std::logic_error("unreachable");
}

namespace {

// Stretch or shrink donor angles to the requested depth: truncate when too
// long, repeat the last layer when too short.
QaoaParams adapt_layers(const QaoaParams& donor, int layers) {
    donor.layers();
    QaoaParams out;
    for (int l = 0; l < layers; ++l) {
        const std::size_t src = std::min<std::size_t>(l, donor.gammas.size() - 1);
        out.gammas.push_back(donor.gammas[src]);
        out.betas.push_back(donor.betas[src]);
    }
    return out;
}

// A single Nelder-Mead pass often stalls with a collapsed simplex. Rebuild a
// fresh simplex at the incumbent and go again until the value stops dropping.
OptimizationResult refine(const std::function<double(const QaoaParams&)>& objective,
                          const QaoaParams& init, const QaoaOptions& opt) {
    auto best = nelder_mead(objective, init, opt.nm_max_iters, opt.nm_tol);
    for (int r = 0; r < opt.nm_restarts; ++r) {
        auto next = nelder_mead(objective, best.params, opt.nm_max_iters, opt.nm_tol);
        if (next.value >= best.value) break;
        best = std::move(next);
    }
    return best;
}

} // namespace

QaoaResult run_qaoa(const QuboMatrix& q, const QaoaOptions& opt) {
    if (opt.layers < 1)
        throw std::domain_error("layers must be >= 1");
    if (opt.shots < 1)
        throw std::domain_error("shots must be >= 1");
    if (opt.nm_restarts < 0)
        throw std::domain_error("nm_restarts must be >= 0");
    if (q.n_vars() > qubit_guard())
        throw SizeGuardError("problem needs " + std::to_string(q.n_vars()) +
                             " qubits, guard is " + std::to_string(qubit_guard()));

    const auto normalized = normalize(qubo_to_ising(q));
    const auto energies = precompute_energies(normalized.ham);

    auto objective = [&](const QaoaParams& params) {
        return expectation(evolve(energies, params), energies);
    };

    QaoaParams params;
    if (opt.fixed_params) {
        if (opt.fixed_params->layers() != opt.layers)
            throw std::domain_error("fixed parameters must match the layer count");
        params = *opt.fixed_params;
    } else {
        switch (opt.strategy) {
            case Strategy::kGrid: {
                params = grid_search(energies, opt.layers, opt.grid_points).params;
                break;
            }
            case Strategy::kGridNm: {
                const auto seed_point = grid_search(energies, 1, opt.grid_points).params;
                QaoaParams init;
                init.gammas.assign(opt.layers, seed_point.gammas[0]);
                init.betas.assign(opt.layers, seed_point.betas[0]);
                params = refine(objective, init, opt).params;
                break;
            }
            case Strategy::kTransferNm: {
                if (!opt.transfer_params)
                    throw std::domain_error("transfer+nm needs donor parameters");
                const auto init = adapt_layers(*opt.transfer_params, opt.layers);
                params = refine(objective, init, opt).params;
                break;
            }
        }
    }

    const auto psi = evolve(energies, params);

    QaoaResult result;
    result.params = params;
    result.alpha = normalized.alpha;
    result.expected_energy = expectation(psi, energies) / normalized.alpha;
    result.counts = sample(psi, opt.shots, opt.seed);

    std::uint64_t best_count = 0;
    for (const auto& [bits, count] : result.counts)
        if (count > best_count) {
            best_count = count;
            result.best_bitstring = bits;
        }
    return result;
}

} // namespace quest
