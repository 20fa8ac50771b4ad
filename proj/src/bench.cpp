#include "quest/bench.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "quest/classical.hpp"
#include "quest/decode.hpp"
#include "quest/errors.hpp"
#include "quest/qubo.hpp"
#include "text_util.hpp"

namespace quest {

namespace {

BitVector bits_from_string(const std::string& s) {
    BitVector x(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i] == '1';
    return x;
}

std::string reference_bits(const Instance& inst, const QuboMatrix& q) {
    if (inst.num_pairs() <= 3)
        return to_bitstring(brute_force_qubo(q).x);
    return to_bitstring(encode_matching(hungarian(weight_matrix(inst)), inst.num_pairs()));
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
    if (opt.sizes.empty() || opt.methods.empty() || opt.seeds.empty())
        throw std::invalid_argument("bench needs sizes, methods, and seeds");
    for (const auto& m : opt.methods)
        if (m != "hungarian" && m != "brute" && m != "anneal" && m != "qaoa")
            throw std::invalid_argument("unknown bench method \"" + m + "\"");

    std::vector<BenchRecord> records;
    for (int size : opt.sizes) {
        auto gen = opt.gen;
        gen.segments = 1;
        for (std::uint64_t seed : opt.seeds) {
            const Instance inst = generate_instance(size, seed, gen);
            const QuboMatrix q = build_qubo(inst);
            const std::string reference = reference_bits(inst, q);
            const auto w = weight_matrix(inst);

            for (const auto& method : opt.methods) {
                BenchRecord rec;
                rec.pairs = size;
                rec.method = method;
                rec.seed = seed;
                const auto start = std::chrono::steady_clock::now();
                try {
                    std::string bits;
                    if (method == "hungarian") {
                        const auto m = hungarian(w);
                        rec.objective = m.total_cost;
                        bits = to_bitstring(encode_matching(m, size));
                    } else if (method == "brute") {
                        const auto m = brute_force_assignment(w);
                        rec.objective = m.total_cost;
                        bits = to_bitstring(encode_matching(m, size));
                    } else if (method == "anneal") {
                        const auto sol = simulated_annealing(q, default_anneal_schedule(q), seed);
                        rec.objective = sol.objective;
                        bits = to_bitstring(sol.x);
                    } else {
                        auto qopt = opt.qaoa;
                        qopt.seed = seed;
                        const auto run = run_qaoa(q, qopt);
                        bits = run.best_bitstring;
                        rec.objective = energy_with_offset(q, bits_from_string(bits));
                    }
                    rec.runtime_s = std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                    rec.bit_sim = bit_similarity(bits, reference);
                } catch (const SizeGuardError& e) {
                    rec.skipped = true;
                    rec.skip_reason = e.what();
                    rec.runtime_s.reset();
                    rec.objective.reset();
                    rec.bit_sim.reset();
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "pairs,method,seed,runtime_s,objective,bit_sim\n";
    for (const auto& r : records) {
        out += std::to_string(r.pairs) + "," + r.method + "," + std::to_string(r.seed) + ",";
        out += r.runtime_s ? detail::format_double(*r.runtime_s) : "";
        out += ",";
        out += r.objective ? detail::format_double(*r.objective) : "";
        out += ",";
        out += r.bit_sim ? detail::format_double(*r.bit_sim) : "";
        out += "\n";
    }
    return out;
}

std::string bench_json(const std::vector<BenchRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["pairs"] = r.pairs;
        row["method"] = r.method;
        row["seed"] = r.seed;
        row["runtime_s"] = r.runtime_s ? nlohmann::json(*r.runtime_s) : nlohmann::json();
        row["objective"] = r.objective ? nlohmann::json(*r.objective) : nlohmann::json();
        row["bit_sim"] = r.bit_sim ? nlohmann::json(*r.bit_sim) : nlohmann::json();
        row["skipped"] = r.skipped;
        if (r.skipped) row["skip_reason"] = r.skip_reason;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

} // namespace quest
