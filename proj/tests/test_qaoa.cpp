#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <doctest.h>

#include "quest/decode.hpp"
#include "quest/errors.hpp"
#include "quest/generator.hpp"
#include "quest/ising.hpp"
#include "quest/qaoa.hpp"
#include "quest/qubo.hpp"

using namespace quest;

namespace {

// restores the guard variable no matter how the enclosing test exits
struct GuardEnv {
    explicit GuardEnv(const char* value) { setenv("QUEST_GUARD_QUBITS", value, 1); }
    ~GuardEnv() { unsetenv("QUEST_GUARD_QUBITS"); }
};

void check_amplitude(const std::complex<double>& got, double re, double im) {
    CHECK(got.real() == doctest::Approx(re).epsilon(1e-12));
    CHECK(got.imag() == doctest::Approx(im).epsilon(1e-12));
}

} // namespace

TEST_CASE("parameter shape validation") {
    CHECK(QaoaParams{{0.1, 0.2}, {0.3, 0.4}}.layers() == 2);
    CHECK_THROWS_AS((QaoaParams{{}, {}}.layers()), std::domain_error);
    CHECK_THROWS_AS((QaoaParams{{0.1}, {0.2, 0.3}}.layers()), std::domain_error);
}

TEST_CASE("single-qubit evolution against hand-computed amplitudes") {
    // E = (0, 1), gamma = pi, beta = pi/4: the phase flips the |1> sign and
    // the mixer rotates the pair into (1+i)/2, -(1+i)/2.
    const EnergyTable energies{0.0, 1.0};
    const auto psi = evolve(energies, {{std::numbers::pi}, {std::numbers::pi / 4}});
    REQUIRE(psi.size() == 2);
    check_amplitude(psi[0], 0.5, 0.5);
    check_amplitude(psi[1], -0.5, -0.5);
}

TEST_CASE("two-qubit two-layer evolution against a frozen reference") {
    const EnergyTable energies{0.0, 0.5, -0.25, 1.0};
    const QaoaParams params{{0.7, 0.25}, {0.3, 1.1}};
    const auto psi = evolve(energies, params);
    REQUIRE(psi.size() == 4);
    check_amplitude(psi[0], -0.258389946506368, 0.21112123324261736);
    check_amplitude(psi[1], -0.5578258132686333, -0.20007171945263724);
    check_amplitude(psi[2], -0.47229029443100246, 0.11207980276961677);
    check_amplitude(psi[3], -0.5246490361224736, -0.16305678163807122);
    CHECK(expectation(psi, energies) == doctest::Approx(0.41853828947853).epsilon(1e-9));
}

TEST_CASE("zero angles leave the uniform superposition untouched") {
    const EnergyTable energies{0.0, 0.5, -0.25, 1.0};
    const auto psi = evolve(energies, {{0.0}, {0.0}});
    for (const auto& a : psi) {
        CHECK(a.real() == 0.5);
        CHECK(a.imag() == 0.0);
    }
    const double mean = (0.0 + 0.5 - 0.25 + 1.0) / 4.0;
    CHECK(expectation(psi, energies) == doctest::Approx(mean).epsilon(1e-9));
}

TEST_CASE("evolution is norm preserving and pi-periodic in beta") {
    const EnergyTable energies{0.3, -1.2, 0.7, 2.0, -0.4, 0.9, -1.6, 0.05};
    const auto psi = evolve(energies, {{0.9}, {0.37}});
    double norm = 0;
    for (const auto& a : psi) norm += std::norm(a);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));

    const auto shifted = evolve(energies, {{0.9}, {0.37 + std::numbers::pi}});
    for (std::size_t z = 0; z < psi.size(); ++z)
        CHECK(std::norm(shifted[z]) == doctest::Approx(std::norm(psi[z])).epsilon(1e-12));
    CHECK(expectation(shifted, energies) ==
          doctest::Approx(expectation(psi, energies)).epsilon(1e-12));
}

TEST_CASE("evolution input validation") {
    CHECK_THROWS_AS(evolve({0.0, 1.0, 2.0}, {{0.1}, {0.1}}), std::invalid_argument);
    CHECK_THROWS_AS(evolve({0.0, 1.0}, {{}, {}}), std::domain_error);
    CHECK_THROWS_AS(expectation(StateVector(2), EnergyTable(4)), std::invalid_argument);
}

TEST_CASE("energy table matches the hamiltonian on every basis state") {
    const auto q = build_qubo(generate_instance(2, 5));
    const auto ham = qubo_to_ising(q);
    const auto energies = precompute_energies(ham);
    REQUIRE(energies.size() == 16);
    for (std::uint64_t z = 0; z < 16; ++z) {
        std::vector<int> spins(4);
        for (int i = 0; i < 4; ++i) spins[i] = (z >> i) & 1 ? -1 : 1;
        CHECK(energies[z] == doctest::Approx(ising_energy(ham, spins)).epsilon(1e-12));
    }
}

TEST_CASE("index to bitstring puts qubit zero first") {
    CHECK(index_to_bits(0, 3) == "000");
    CHECK(index_to_bits(1, 3) == "100");
    CHECK(index_to_bits(2, 3) == "010");
    CHECK(index_to_bits(5, 3) == "101");
}

TEST_CASE("sampling") {
    SUBCASE("a point mass always yields the same outcome") {
        StateVector psi{{0, 0}, {0, 0}, {1, 0}, {0, 0}};
        const auto counts = sample(psi, 500, 42);
        REQUIRE(counts.size() == 1);
        CHECK(counts.at("01") == 500);
    }
    SUBCASE("deterministic per seed, total equals shots") {
        const EnergyTable energies{0.0, 0.5, -0.25, 1.0};
        const auto psi = evolve(energies, {{0.4}, {0.8}});
        const auto a = sample(psi, 2000, 7);
        const auto b = sample(psi, 2000, 7);
        CHECK(a == b);
        std::uint64_t total = 0;
        for (const auto& [bits, count] : a) total += count;
        CHECK(total == 2000);
        CHECK(a != sample(psi, 2000, 8));
    }
}

TEST_CASE("grid search scans the inclusive lattice") {
    const EnergyTable energies{0.0, 0.5, -0.25, 1.0};
    const int points = 7;
    const auto got = grid_search(energies, 1, points);

    // independent rescan through the public circuit primitives
    double best = std::numeric_limits<double>::infinity();
    double best_gamma = 0, best_beta = 0;
    const double step = std::numbers::pi / (points - 1);
    for (int gi = 0; gi < points; ++gi)
        for (int bi = 0; bi < points; ++bi) {
            const QaoaParams p{{gi * step}, {bi * step}};
            const double value = expectation(evolve(energies, p), energies);
            if (value < best) {
                best = value;
                best_gamma = p.gammas[0];
                best_beta = p.betas[0];
            }
        }
    CHECK(got.value == doctest::Approx(best).epsilon(1e-12));
    CHECK(got.params.gammas[0] == doctest::Approx(best_gamma).epsilon(1e-12));
    CHECK(got.params.betas[0] == doctest::Approx(best_beta).epsilon(1e-12));
    CHECK(got.value <= 0.3125 + 1e-12);  // the zero-angle lattice point bounds it
}

TEST_CASE("grid search guards") {
    const EnergyTable energies{0.0, 1.0};
    CHECK_THROWS_AS(grid_search(energies, 2, 21), std::domain_error);
    CHECK_THROWS_AS(grid_search(energies, 1, 1), std::domain_error);
}

TEST_CASE("nelder-mead") {
    SUBCASE("minimizes a smooth bowl") {
        const auto objective = [](const QaoaParams& p) {
            const double dg = p.gammas[0] - 0.3;
            const double db = p.betas[0] + 0.7;
            return dg * dg + db * db;
        };
        const auto res = nelder_mead(objective, {{0.0}, {0.0}}, 300, 1e-10);
        CHECK(res.value < 1e-8);
        CHECK(res.params.gammas[0] == doctest::Approx(0.3).epsilon(1e-3));
        CHECK(res.params.betas[0] == doctest::Approx(-0.7).epsilon(1e-3));
    }
    SUBCASE("handles several layers at once") {
        const auto objective = [](const QaoaParams& p) {
            double f = 0;
            for (std::size_t l = 0; l < p.gammas.size(); ++l) {
                const double dg = p.gammas[l] - static_cast<double>(l);
                const double db = p.betas[l] + 1.0;
                f += dg * dg + db * db;
            }
            return f;
        };
        const auto res = nelder_mead(objective, {{0.1, 0.1}, {0.1, 0.1}}, 2000, 1e-12);
        CHECK(res.value < 1e-6);
        CHECK(res.params.gammas[1] == doctest::Approx(1.0).epsilon(1e-2));
    }
    SUBCASE("never returns worse than its starting point") {
        const auto objective = [](const QaoaParams& p) {
            return std::cos(3.0 * p.gammas[0]) + std::sin(2.0 * p.betas[0]);
        };
        const QaoaParams init{{1.0}, {1.0}};
        const auto res = nelder_mead(objective, init, 50, 1e-9);
        CHECK(res.value <= objective(init) + 1e-12);
    }
    SUBCASE("argument validation") {
        const auto objective = [](const QaoaParams&) { return 0.0; };
        CHECK_THROWS_AS(nelder_mead(objective, {{}, {}}, 10, 1e-6), std::domain_error);
        CHECK_THROWS_AS(nelder_mead(objective, {{1}, {1}}, 0, 1e-6), std::domain_error);
        CHECK_THROWS_AS(nelder_mead(objective, {{1}, {1}}, 10, 0.0), std::domain_error);
    }
}

TEST_CASE("strategy names") {
    CHECK(strategy_from_name("grid") == Strategy::kGrid);
    CHECK(strategy_from_name("grid+nm") == Strategy::kGridNm);
    CHECK(strategy_from_name("transfer+nm") == Strategy::kTransferNm);
    CHECK(strategy_name(Strategy::kGridNm) == std::string("grid+nm"));
    CHECK_THROWS_AS(strategy_from_name("annealing"), std::domain_error);
}

TEST_CASE("full pipeline on a two-pair instance") {
    const auto q = build_qubo(generate_instance(2, 3));

    QaoaOptions grid_opt;
    grid_opt.layers = 1;
    grid_opt.strategy = Strategy::kGrid;
    grid_opt.shots = 4000;
    grid_opt.seed = 11;

    SUBCASE("deterministic and internally consistent") {
        const auto a = run_qaoa(q, grid_opt);
        const auto b = run_qaoa(q, grid_opt);
        CHECK(a.counts == b.counts);
        CHECK(a.best_bitstring == b.best_bitstring);

        std::uint64_t total = 0;
        for (const auto& [bits, count] : a.counts) {
            CHECK(bits.size() == 4);
            total += count;
        }
        CHECK(total == grid_opt.shots);
        CHECK(a.counts.count(a.best_bitstring) == 1);

        // expected_energy must equal re-simulating at the returned angles
        const auto normalized = normalize(qubo_to_ising(q));
        const auto energies = precompute_energies(normalized.ham);
        const double replay =
            expectation(evolve(energies, a.params), energies) / normalized.alpha;
        CHECK(a.expected_energy == doctest::Approx(replay).epsilon(1e-12));
        CHECK(a.alpha == normalized.alpha);
    }

    SUBCASE("simplex refinement never loses to its grid seed") {
        const auto coarse = run_qaoa(q, grid_opt);
        auto refined_opt = grid_opt;
        refined_opt.strategy = Strategy::kGridNm;
        const auto refined = run_qaoa(q, refined_opt);
        CHECK(refined.expected_energy <= coarse.expected_energy + 1e-9);
    }

    SUBCASE("restarts never worsen the refined value") {
        auto base_opt = grid_opt;
        base_opt.strategy = Strategy::kGridNm;
        base_opt.layers = 2;
        base_opt.nm_restarts = 0;
        const auto single_pass = run_qaoa(q, base_opt);

        auto restart_opt = base_opt;
        restart_opt.nm_restarts = 5;
        const auto restarted = run_qaoa(q, restart_opt);
        CHECK(restarted.expected_energy <= single_pass.expected_energy + 1e-9);
    }

    SUBCASE("parameter transfer adapts donor depth") {
        QaoaOptions opt = grid_opt;
        opt.strategy = Strategy::kTransferNm;
        opt.layers = 3;
        opt.nm_max_iters = 60;
        opt.transfer_params = QaoaParams{{0.4}, {0.2}};
        const auto res = run_qaoa(q, opt);
        CHECK(res.params.layers() == 3);
        CHECK_FALSE(res.best_bitstring.empty());
    }

    SUBCASE("fixed zero angles reproduce the table mean") {
        QaoaOptions opt = grid_opt;
        opt.fixed_params = QaoaParams{{0.0}, {0.0}};
        const auto res = run_qaoa(q, opt);

        const auto normalized = normalize(qubo_to_ising(q));
        const auto energies = precompute_energies(normalized.ham);
        double mean = 0;
        for (double e : energies) mean += e / static_cast<double>(energies.size());
        CHECK(res.expected_energy == doctest::Approx(mean / normalized.alpha).epsilon(1e-9));
    }

    SUBCASE("option validation") {
        QaoaOptions opt = grid_opt;
        opt.layers = 2;
        CHECK_THROWS_AS(run_qaoa(q, opt), std::domain_error);  // grid is p = 1 only

        opt = grid_opt;
        opt.strategy = Strategy::kTransferNm;
        CHECK_THROWS_AS(run_qaoa(q, opt), std::domain_error);  // donor missing

        opt = grid_opt;
        opt.fixed_params = QaoaParams{{0.1, 0.2}, {0.1, 0.2}};
        CHECK_THROWS_AS(run_qaoa(q, opt), std::domain_error);  // depth mismatch

        opt = grid_opt;
        opt.shots = 0;
        CHECK_THROWS_AS(run_qaoa(q, opt), std::domain_error);

        opt = grid_opt;
        opt.nm_restarts = -1;
        CHECK_THROWS_AS(run_qaoa(q, opt), std::domain_error);
    }
}

TEST_CASE("qubit guard") {
    SUBCASE("environment override caps the pipeline") {
        GuardEnv env("3");
        CHECK(qubit_guard() == 3);
        const auto q = build_qubo(generate_instance(2, 3));  // needs 4 qubits
        QaoaOptions opt;
        opt.layers = 1;
        opt.strategy = Strategy::kGrid;
        CHECK_THROWS_AS(run_qaoa(q, opt), SizeGuardError);

        IsingHamiltonian ham;
        ham.n_spins = 4;
        ham.h = {1, 1, 1, 1};
        CHECK_THROWS_AS(precompute_energies(ham), SizeGuardError);
    }
    SUBCASE("malformed override is rejected") {
        GuardEnv env("not-a-number");
        CHECK_THROWS_AS(qubit_guard(), std::domain_error);
    }
    SUBCASE("zero or negative override is rejected") {
        GuardEnv env("0");
        CHECK_THROWS_AS(qubit_guard(), std::domain_error);
    }
    SUBCASE("default applies when unset") {
        unsetenv("QUEST_GUARD_QUBITS");
        CHECK(qubit_guard() == 24);
    }
}
