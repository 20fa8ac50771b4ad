#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quest/model.hpp"

namespace quest {

using BitVector = std::vector<std::uint8_t>;

// Dense symmetric QUBO matrix plus a constant offset:
//   objective(x) = x^T Q x + offset.
// Storage is a full dense matrix; set() keeps it symmetric, set_entry()
// writes one cell (for tests and raw construction). Consumers that depend on
// symmetry call require_symmetric() first.
class QuboMatrix {
public:
    explicit QuboMatrix(int n_vars, double offset = 0.0);

    int n_vars() const { return n_; }
    double offset() const { return offset_; }
    void set_offset(double v) { offset_ = v; }

    double at(int i, int j) const;
    void set(int i, int j, double value);        // writes (i,j) and (j,i)
    void set_entry(int i, int j, double value);  // writes (i,j) only
    void add(int i, int j, double value);        // adds to (i,j) and (j,i)

    double max_abs_entry() const;

    // Throws std::domain_error when any |Q_ij - Q_ji| exceeds
    // tol * max(1, max_abs_entry()).
    void require_symmetric(double tol = 1e-9) const;

private:
    void check(int i, int j) const;

    int n_;
    double offset_;
    std::vector<double> q_;
};

// Encodes the single-segment matching problem over variables x_e,
// e = (s, b) flattened row-major as s * n + b:
//   Q_ee   = w_{s,b} - 2 * lambda3
//   Q_ee'  = lambda3 when e != e' share a surfer or a breaker, else 0
//   offset = 2 * n * lambda3
// so that x^T Q x + offset equals the matching cost plus the one-to-one
// penalty terms lambda3 * sum_s (sum_b x_{s,b} - 1)^2 + lambda3 * sum_b (...)^2.
QuboMatrix build_qubo(const Instance& inst);

// x^T Q x (offset NOT included; add q.offset() for the constrained objective).
double energy(const QuboMatrix& q, const BitVector& x);
double energy_with_offset(const QuboMatrix& q, const BitVector& x);

// Text exchange format:
//   QUBO <n_vars> <offset>
//   <i> <j> <value>        one line per upper-triangular nonzero, i <= j
// Values use shortest round-trip decimal form. import_qubo() rejects
// malformed headers, out-of-range or duplicate (i, j) entries, i > j, and
// trailing junk, reporting 1-based line numbers.
std::string export_qubo(const QuboMatrix& q);
QuboMatrix import_qubo(const std::string& text);

} // namespace quest
