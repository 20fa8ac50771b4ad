#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quest/bench.hpp"
#include "quest/classical.hpp"
#include "quest/decode.hpp"
#include "quest/errors.hpp"
#include "quest/generator.hpp"
#include "quest/instance_json.hpp"
#include "quest/qaoa.hpp"
#include "quest/qubo.hpp"

namespace {

using nlohmann::json;

int exit_code = 0;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

long parse_integer(const std::string& s) {
    long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::runtime_error("expected an integer, got \"" + s + "\"");
    return v;
}

// "2..5" expands to 2,3,4,5; otherwise a comma list.
std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> sizes;
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const long lo = parse_integer(s.substr(0, dots));
        const long hi = parse_integer(s.substr(dots + 2));
        if (lo < 1 || hi < lo)
            throw std::runtime_error("bad size range \"" + s + "\"");
        for (long v = lo; v <= hi; ++v) sizes.push_back(static_cast<int>(v));
        return sizes;
    }
    for (const auto& part : split_commas(s)) {
        const long v = parse_integer(part);
        if (v < 1)
            throw std::runtime_error("sizes must be positive");
        sizes.push_back(static_cast<int>(v));
    }
    if (sizes.empty())
        throw std::runtime_error("no sizes given");
    return sizes;
}

std::vector<std::uint64_t> parse_seeds(const std::string& s) {
    std::vector<std::uint64_t> seeds;
    for (const auto& part : split_commas(s))
        seeds.push_back(static_cast<std::uint64_t>(parse_integer(part)));
    if (seeds.empty())
        throw std::runtime_error("no seeds given");
    return seeds;
}

quest::QaoaParams params_from_file(const std::string& path) {
    json doc = json::parse(read_file(path));
    if (!doc.is_object() || !doc.contains("gammas") || !doc.contains("betas"))
        throw quest::ParseError("parameter file needs \"gammas\" and \"betas\" arrays");
    quest::QaoaParams p;
    for (const auto& v : doc.at("gammas")) p.gammas.push_back(v.get<double>());
    for (const auto& v : doc.at("betas")) p.betas.push_back(v.get<double>());
    p.layers();
    return p;
}

json params_to_json(const quest::QaoaParams& p) {
    return {{"gammas", p.gammas}, {"betas", p.betas}};
}

json matching_report(const quest::Matching& m, const quest::Instance& inst) {
    json out;
    out["assignment"] = m.pairs;
    out["objective"] = quest::matching_cost(m, inst);
    out["bits"] = quest::to_bitstring(quest::encode_matching(m, inst.num_pairs()));
    return out;
}

// Attaches decode results for a raw solver bitstring: valid flag, violation
// or assignment, constrained objective.
void attach_bits_report(json& out, const std::string& bits, const quest::Instance& inst,
                        const quest::QuboMatrix& q) {
    out["bits"] = bits;
    quest::BitVector x(bits.size(), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) x[i] = bits[i] == '1';
    out["objective"] = quest::energy_with_offset(q, x);
    const auto decoded = quest::decode(bits);
    out["valid"] = decoded.valid();
    if (decoded.valid()) {
        out["assignment"] = decoded.matching->pairs;
        out["matching_cost"] = quest::matching_cost(*decoded.matching, inst);
    } else {
        out["violation"] = decoded.violation;
    }
}

void run_solve_multi(const quest::Instance& inst, const std::string& method) {
    if (method != "brute")
        throw std::domain_error("multi-segment instances support --method brute only");
    json out;
    out["method"] = "brute";
    out["pairs"] = inst.num_pairs();
    out["segments"] = inst.num_segments();
    const auto start = std::chrono::steady_clock::now();
    const auto sol = quest::brute_force_multi(inst);
    out["runtime_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!sol) {
        out["feasible"] = false;
        std::cout << out.dump(2) << "\n";
        exit_code = 2;
        return;
    }
    out["feasible"] = true;
    out["objective"] = sol->cost;
    json assignment = json::array();
    for (int s = 0; s < inst.num_pairs(); ++s) {
        json per_segment = json::array();
        for (int k = 0; k < inst.num_segments(); ++k)
            for (int b = 0; b < inst.num_pairs(); ++b)
                if (sol->assignment.get(s, b, k)) per_segment.push_back(b);
        assignment.push_back(per_segment);
    }
    out["assignment"] = assignment;
    std::cout << out.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"windbreaker/windsurfer matching toolkit"};
    app.require_subcommand(1);

    auto* gen_cmd = app.add_subcommand("generate", "write a synthetic instance as JSON");
    int gen_pairs = 0;
    std::uint64_t gen_seed = 1;
    int gen_segments = 1;
    std::string gen_out;
    gen_cmd->add_option("--pairs", gen_pairs, "number of surfer/breaker pairs")->required();
    gen_cmd->add_option("--seed", gen_seed, "RNG seed");
    gen_cmd->add_option("--segments", gen_segments, "number of highway segments");
    gen_cmd->add_option("--out", gen_out, "output file")->required();
    gen_cmd->callback([&] {
        quest::GeneratorParams params;
        params.segments = gen_segments;
        const auto inst = quest::generate_instance(gen_pairs, gen_seed, params);
        quest::save_instance(inst, gen_out);
        std::cout << "wrote " << gen_out << " (" << inst.num_pairs() << " pairs, "
                  << inst.num_segments() << " segment(s))\n";
    });

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
    std::string solve_in, solve_method = "hungarian", solve_strategy = "grid+nm";
    std::string transfer_from;
    int solve_p = 4, solve_grid_points = 21;
    std::uint64_t solve_shots = 10000, solve_seed = 1;
    solve_cmd->add_option("--in", solve_in, "instance file")->required();
    solve_cmd->add_option("--method", solve_method, "hungarian | brute | anneal | qaoa")
        ->check(CLI::IsMember({"hungarian", "brute", "anneal", "qaoa"}));
    solve_cmd->add_option("--p", solve_p, "circuit depth (qaoa)");
    solve_cmd->add_option("--shots", solve_shots, "measurement shots (qaoa)");
    solve_cmd->add_option("--seed", solve_seed, "RNG seed (anneal, qaoa)");
    solve_cmd->add_option("--strategy", solve_strategy, "grid | grid+nm | transfer+nm (qaoa)");
    solve_cmd->add_option("--grid-points", solve_grid_points, "grid resolution per axis (qaoa)");
    solve_cmd->add_option("--transfer-from", transfer_from,
                          "JSON file with donor gammas/betas (transfer+nm)");
    solve_cmd->callback([&] {
        const auto inst = quest::load_instance(solve_in);
        if (inst.num_segments() > 1) {
            run_solve_multi(inst, solve_method);
            return;
        }
        json out;
        out["method"] = solve_method;
        out["pairs"] = inst.num_pairs();
        const auto start = std::chrono::steady_clock::now();
        if (solve_method == "hungarian") {
            out.update(matching_report(quest::hungarian(quest::weight_matrix(inst)), inst));
        } else if (solve_method == "brute") {
            out.update(
                matching_report(quest::brute_force_assignment(quest::weight_matrix(inst)), inst));
        } else if (solve_method == "anneal") {
            const auto q = quest::build_qubo(inst);
            const auto sol =
                quest::simulated_annealing(q, quest::default_anneal_schedule(q), solve_seed);
            out["energy"] = sol.energy;
            attach_bits_report(out, quest::to_bitstring(sol.x), inst, q);
        } else {
            const auto q = quest::build_qubo(inst);
            quest::QaoaOptions opt;
            opt.layers = solve_p;
            opt.shots = solve_shots;
            opt.seed = solve_seed;
            opt.grid_points = solve_grid_points;
            opt.strategy = quest::strategy_from_name(solve_strategy);
            if (!transfer_from.empty())
                opt.transfer_params = params_from_file(transfer_from);
            const auto run = quest::run_qaoa(q, opt);
            out["expected_energy"] = run.expected_energy;
            out["params"] = params_to_json(run.params);
            out["shots"] = solve_shots;
            json dist = json::object();
            for (const auto& [bits, count] : run.counts) dist[bits] = count;
            out["distribution"] = std::move(dist);
            attach_bits_report(out, run.best_bitstring, inst, q);
        }
        out["runtime_s"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << out.dump(2) << "\n";
    });

    auto* qubo_cmd = app.add_subcommand("qubo", "QUBO matrix operations");
    qubo_cmd->require_subcommand(1);
    auto* export_cmd = qubo_cmd->add_subcommand("export", "encode an instance and write .qubo");
    std::string export_in, export_out;
    export_cmd->add_option("--in", export_in, "instance file")->required();
    export_cmd->add_option("--out", export_out, "output .qubo file")->required();
    export_cmd->callback([&] {
        const auto inst = quest::load_instance(export_in);
        const auto q = quest::build_qubo(inst);
        write_file(export_out, quest::export_qubo(q));
        std::cout << "wrote " << export_out << " (" << q.n_vars() << " variables)\n";
    });

    auto* decode_cmd = app.add_subcommand("decode", "interpret a measured bitstring");
    std::string decode_bits_arg, decode_in;
    decode_cmd->add_option("--bits", decode_bits_arg, "0/1 string, whitespace ignored")
        ->required();
    decode_cmd->add_option("--in", decode_in, "instance file (adds the matching cost)");
    decode_cmd->callback([&] {
        const auto bits = quest::clean_bits(decode_bits_arg);
        const auto decoded = quest::decode(bits);
        json out;
        out["bits"] = bits;
        out["valid"] = decoded.valid();
        if (decoded.valid()) {
            out["assignment"] = decoded.matching->pairs;
            if (!decode_in.empty()) {
                const auto inst = quest::load_instance(decode_in);
                out["matching_cost"] = quest::matching_cost(*decoded.matching, inst);
            }
        } else {
            out["violation"] = decoded.violation;
            exit_code = 2;
        }
        std::cout << out.dump(2) << "\n";
    });

    auto* bench_cmd = app.add_subcommand("bench", "compare methods over generated instances");
    std::string bench_sizes = "2..4", bench_methods = "hungarian,brute,anneal";
    std::string bench_seeds = "1,2,3", bench_out = "bench";
    int bench_p = 1, bench_grid_points = 21;
    std::uint64_t bench_shots = 2000;
    bench_cmd->add_option("--sizes", bench_sizes, "e.g. 2..5 or 2,4,8");
    bench_cmd->add_option("--methods", bench_methods, "comma list of solvers");
    bench_cmd->add_option("--seeds", bench_seeds, "comma list of seeds");
    bench_cmd->add_option("--out", bench_out, "output prefix (.csv and .json)");
    bench_cmd->add_option("--p", bench_p, "qaoa circuit depth");
    bench_cmd->add_option("--shots", bench_shots, "qaoa shots");
    bench_cmd->add_option("--grid-points", bench_grid_points, "qaoa grid resolution");
    bench_cmd->callback([&] {
        quest::BenchOptions opt;
        opt.sizes = parse_sizes(bench_sizes);
        opt.methods = split_commas(bench_methods);
        opt.seeds = parse_seeds(bench_seeds);
        opt.qaoa.layers = bench_p;
        opt.qaoa.shots = bench_shots;
        opt.qaoa.grid_points = bench_grid_points;
        if (bench_p == 1) opt.qaoa.strategy = quest::Strategy::kGrid;
        const auto records = quest::run_bench(opt);
        write_file(bench_out + ".csv", quest::bench_csv(records));
        write_file(bench_out + ".json", quest::bench_json(records));
        int skipped = 0;
        for (const auto& r : records) skipped += r.skipped;
        std::cout << "wrote " << bench_out << ".csv and " << bench_out << ".json ("
                  << records.size() << " rows, " << skipped << " skipped)\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
