#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quest/generator.hpp"
#include "quest/qaoa.hpp"

namespace quest {

struct BenchOptions {
    std::vector<int> sizes;
    std::vector<std::string> methods;  // hungarian | brute | anneal | qaoa
    std::vector<std::uint64_t> seeds;
    GeneratorParams gen;
    QaoaOptions qaoa;
};

// One (size, method, seed) cell. A method that trips a size guard produces a
// skipped record with the reason, not a failure.
struct BenchRecord {
    int pairs = 0;
    std::string method;
    std::uint64_t seed = 0;
    std::optional<double> runtime_s;
    std::optional<double> objective;
    std::optional<double> bit_sim;
    bool skipped = false;
    std::string skip_reason;
};

// Runs every method on the same generated instance per (size, seed).
// objective is the constrained matching cost of the produced solution;
// bit_sim compares the produced bitstring against the exact QUBO optimum
// (up to three pairs) or the Hungarian matching's encoding beyond that.
std::vector<BenchRecord> run_bench(const BenchOptions& opt);

// CSV with header pairs,method,seed,runtime_s,objective,bit_sim; skipped
// cells leave the numeric fields empty.
std::string bench_csv(const std::vector<BenchRecord>& records);

// Same records as a JSON array, nulls for missing values.
std::string bench_json(const std::vector<BenchRecord>& records);

} // namespace quest
