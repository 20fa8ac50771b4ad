#include "quest/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "quest/errors.hpp"
#include "rng_util.hpp"

namespace quest {

namespace {

void check_square(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    if (n == 0)
        throw std::domain_error("cost matrix is empty");
    for (const auto& row : cost) {
        if (row.size() != n)
            throw std::domain_error("cost matrix must be square");
        for (double c : row)
            if (!std::isfinite(c))
                throw std::domain_error("cost matrix entries must be finite");
    }
}

// Kuhn-Munkres with potentials, 1-indexed internally. Fills the optimal
// matching and the final dual potentials (u over rows, v over columns).
void solve_potentials(const std::vector<std::vector<double>>& a, int n,
                      std::vector<int>& row_match, std::vector<double>& u,
                      std::vector<double>& v) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    u.assign(n + 1, 0.0);
    v.assign(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                if (minv[j] < delta) { delta = minv[j]; j1 = j; }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    row_match.assign(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) row_match[p[j] - 1] = j - 1;
}

// Kuhn augmenting search over the tight subgraph, restricted to free
// breakers. tight[s] holds ascending breaker indices.
bool augment(int s, const std::vector<std::vector<int>>& tight,
             const std::vector<char>& breaker_blocked, std::vector<char>& visited,
             std::vector<int>& surfer_match, std::vector<int>& breaker_match) {
    for (int b : tight[s]) {
        if (breaker_blocked[b] || visited[b]) continue;
        visited[b] = 1;
        if (breaker_match[b] < 0 ||
            augment(breaker_match[b], tight, breaker_blocked, visited, surfer_match,
                    breaker_match)) {
            surfer_match[s] = b;
            breaker_match[b] = s;
            return true;
        }
    }
    return false;
}

} // namespace

Matching hungarian(const std::vector<std::vector<double>>& cost) {
    check_square(cost);
    const int n = static_cast<int>(cost.size());

    std::vector<int> row_match;
    std::vector<double> u, v;
    solve_potentials(cost, n, row_match, u, v);

    // By complementary slackness every optimal matching uses only edges with
    // zero reduced cost against the optimal potentials, and every perfect
    // matching inside that tight subgraph is optimal. Rebuild the matching
    // lexicographically: fix surfers in order, preferring the smallest tight
    // breaker that still leaves the rest perfectly matchable.
    double scale = 1.0;
    for (const auto& row : cost)
        for (double c : row) scale = std::max(scale, std::abs(c));
    const double tol = 1e-9 * scale;

    std::vector<std::vector<int>> tight(n);
    for (int s = 0; s < n; ++s)
        for (int b = 0; b < n; ++b)
            if (cost[s][b] - u[s + 1] - v[b + 1] <= tol)
                tight[s].push_back(b);

    std::vector<int> surfer_match = row_match, breaker_match(n, -1);
    for (int s = 0; s < n; ++s) breaker_match[surfer_match[s]] = s;

    std::vector<char> fixed(n, 0);
    Matching result;
    result.pairs.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        for (int b : tight[s]) {
            if (fixed[b]) continue;
            if (surfer_match[s] == b) {
                result.pairs[s] = b;
                break;
            }
            // Swap s onto b, then try to re-match the surfer that held b.
            const int displaced = breaker_match[b];
            const int freed = surfer_match[s];
            surfer_match[s] = b;
            breaker_match[b] = s;
            surfer_match[displaced] = -1;
            breaker_match[freed] = -1;

            std::vector<char> blocked = fixed;
            blocked[b] = 1;
            std::vector<char> visited(n, 0);
            if (augment(displaced, tight, blocked, visited, surfer_match, breaker_match)) {
                result.pairs[s] = b;
                break;
            }
            surfer_match[s] = freed;
            breaker_match[freed] = s;
            surfer_match[displaced] = b;
            breaker_match[b] = displaced;
        }
        if (result.pairs[s] < 0) result.pairs[s] = surfer_match[s];
        fixed[result.pairs[s]] = 1;
    }

    result.total_cost = 0;
    for (int s = 0; s < n; ++s) result.total_cost += cost[s][result.pairs[s]];
    return result;
}

Matching brute_force_assignment(const std::vector<std::vector<double>>& cost) {
    check_square(cost);
    const int n = static_cast<int>(cost.size());
    if (n > 10)
        throw SizeGuardError("brute-force assignment is limited to n <= 10, got n = " +
                             std::to_string(n));

    double scale = 1.0;
    for (const auto& row : cost)
        for (double c : row) scale = std::max(scale, std::abs(c));
    const double tol = 1e-9 * scale;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double lowest = std::numeric_limits<double>::infinity();
    do {
        double c = 0;
        for (int s = 0; s < n; ++s) c += cost[s][perm[s]];
        lowest = std::min(lowest, c);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Second pass: take the lexicographically first permutation within the
    // same rounding tolerance hungarian() uses for tight edges, so a one-ulp
    // summation difference cannot decide between mathematically tied
    // matchings.
    Matching best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        double c = 0;
        for (int s = 0; s < n; ++s) c += cost[s][perm[s]];
        if (c <= lowest + tol) {
            best.pairs = perm;
            best.total_cost = c;
            return best;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SolveResult brute_force_qubo(const QuboMatrix& q) {
    const int n = q.n_vars();
    if (n > 20)
        throw SizeGuardError("brute-force QUBO is limited to 20 variables, got " +
                             std::to_string(n));

    SolveResult best;
    best.solver = Solver::kBrute;
    best.energy = std::numeric_limits<double>::infinity();
    std::vector<int> on;
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < states; ++v) {
        on.clear();
        for (int i = 0; i < n; ++i)
            if ((v >> (n - 1 - i)) & 1) on.push_back(i);
        double e = 0;
        for (int i : on)
            for (int j : on) e += q.at(i, j);
        if (e < best.energy) {
            best.energy = e;
            best.x.assign(n, 0);
            for (int i : on) best.x[i] = 1;
        }
    }
    best.objective = best.energy + q.offset();
    return best;
}

AnnealSchedule default_anneal_schedule(const QuboMatrix& q) {
    AnnealSchedule s;
    s.t_start = q.max_abs_entry();
    if (s.t_start == 0) s.t_start = 1.0;
    s.t_end = 1e-3 * s.t_start;
    s.sweeps = 200 * q.n_vars();
    return s;
}

SolveResult simulated_annealing(const QuboMatrix& q, const AnnealSchedule& schedule,
                                std::uint64_t seed) {
    if (!(schedule.t_start > schedule.t_end) || !(schedule.t_end > 0))
        throw std::domain_error("anneal schedule requires t_start > t_end > 0");
    if (schedule.sweeps < 1)
        throw std::domain_error("anneal schedule requires at least one sweep");
    q.require_symmetric();

    const int n = q.n_vars();
    std::mt19937_64 gen(seed);

    BitVector x(n, 0);
    for (int i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(gen() & 1);

    // field[i] = sum_{j != i} Q_ij x_j, kept incrementally so a flip costs
    // O(1) to evaluate and O(n) to commit.
    std::vector<double> field(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && x[j]) field[i] += q.at(i, j);

    double e = energy(q, x);
    BitVector best_x = x;
    double best_e = e;

    const double ratio = schedule.t_end / schedule.t_start;
    for (int sweep = 0; sweep < schedule.sweeps; ++sweep) {
        const double frac = schedule.sweeps > 1
                                ? static_cast<double>(sweep) / (schedule.sweeps - 1)
                                : 0.0;
        const double temp = schedule.t_start * std::pow(ratio, frac);
        for (int i = 0; i < n; ++i) {
            const double delta = x[i] ? -(q.at(i, i) + 2.0 * field[i])
                                      : (q.at(i, i) + 2.0 * field[i]);
            if (delta > 0 && detail::uniform01(gen) >= std::exp(-delta / temp))
                continue;
            const double sign = x[i] ? -1.0 : 1.0;
            x[i] ^= 1;
            e += delta;
            for (int j = 0; j < n; ++j)
                if (j != i) field[j] += sign * q.at(j, i);
            if (e < best_e) {
                best_e = e;
                best_x = x;
            }
        }
    }

    SolveResult out;
    out.solver = Solver::kAnneal;
    out.x = std::move(best_x);
    out.energy = energy(q, out.x);  // drop any incremental drift
    out.objective = out.energy + q.offset();
    return out;
}

namespace {

// All injective maps surfer->breaker in lexicographic order; empty when
// there are more surfers than breakers.
void enumerate_injective(int n_s, int n_b, std::vector<int>& cur, std::vector<char>& used,
                         std::vector<std::vector<int>>& out) {
    const int s = static_cast<int>(cur.size());
    if (s == n_s) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b < n_b; ++b) {
        if (used[b]) continue;
        used[b] = 1;
        cur.push_back(b);
        enumerate_injective(n_s, n_b, cur, used, out);
        cur.pop_back();
        used[b] = 0;
    }
}

} // namespace

std::optional<MultiSolution> brute_force_multi(const Instance& inst) {
    inst.validate();
    const int n_s = inst.num_pairs();
    const int n_b = inst.num_breakers();
    const int k_count = inst.num_segments();
    if (n_s > 10 || n_b > 10)
        throw SizeGuardError("multi-segment brute force is limited to 10 vehicles per side");

    std::vector<std::vector<int>> maps;
    std::vector<int> cur;
    std::vector<char> used(n_b, 0);
    enumerate_injective(n_s, n_b, cur, used, maps);
    if (maps.empty())
        return std::nullopt;

    double combos = 1;
    for (int k = 0; k < k_count; ++k) {
        combos *= static_cast<double>(maps.size());
        if (combos > 1e6)
            throw SizeGuardError("multi-segment brute force is limited to 1e6 candidates");
    }

    std::optional<MultiSolution> best;
    std::vector<std::size_t> digits(k_count, 0);
    MultiAssignment x(n_s, n_b, k_count);
    while (true) {
        for (int k = 0; k < k_count; ++k)
            for (int s = 0; s < n_s; ++s)
                for (int b = 0; b < n_b; ++b)
                    x.set(s, b, k, maps[digits[k]][s] == b);

        if (feasible(inst, x).ok) {
            const double c = multi_objective(inst, x);
            if (!best || c < best->cost)
                best = MultiSolution{x, c};
        }

        int k = k_count - 1;
        while (k >= 0 && ++digits[k] == maps.size()) {
            digits[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return best;
}

} // namespace quest
