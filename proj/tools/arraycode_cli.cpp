#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arraycode/alist.hpp"
#include "arraycode/bounds.hpp"
#include "arraycode/channel_sim.hpp"
#include "arraycode/code_model.hpp"
#include "arraycode/cycle_equations.hpp"
#include "arraycode/gf2.hpp"
#include "arraycode/sequence_search.hpp"
#include "arraycode/spec_json.hpp"
#include "arraycode/tanner.hpp"

namespace {

using namespace arraycode;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitFixtureMismatch = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list: " + text);
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + text);
    return out;
}

Mask load_mask_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mask file: " + path);
    Mask mask;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::uint8_t> row;
        std::istringstream fields(line);
        int v;
        while (fields >> v) {
            if (v != 0 && v != 1) throw std::invalid_argument("mask entries must be 0 or 1");
            row.push_back(static_cast<std::uint8_t>(v));
        }
        if (!row.empty()) mask.push_back(std::move(row));
    }
    if (mask.empty()) throw std::invalid_argument("mask file has no rows");
    return mask;
}

std::vector<CycleEquation> flatten(const std::map<int, std::vector<CycleEquation>>& by_len) {
    std::vector<CycleEquation> all;
    for (const auto& [len, eqs] : by_len) all.insert(all.end(), eqs.begin(), eqs.end());
    return all;
}

int cmd_construct(std::uint32_t q, const std::string& rows, const std::string& cols,
                  const std::string& mask_file, const std::string& out_path,
                  const std::string& alist_path) {
    std::optional<Mask> mask;
    if (!mask_file.empty()) mask = load_mask_file(mask_file);
    ArrayCodeSpec spec(Modulus(q), parse_int_list(rows), parse_int_list(cols), std::move(mask));
    save_spec_file(out_path, spec);
    std::cout << "wrote spec: " << out_path << " (q=" << q << ", r=" << spec.r()
              << ", s=" << spec.s() << ")\n";
    if (!alist_path.empty()) {
        const auto h = build_parity_check(spec);
        std::ofstream out(alist_path);
        if (!out) throw std::runtime_error("cannot open output file: " + alist_path);
        write_alist(out, h);
        std::cout << "wrote alist: " << alist_path << " (" << h.n_rows << "x" << h.n_cols << ")\n";
    }
    return kExitOk;
}

// Fixture lines: `<cycle_len> <equation text>`, e.g. `6 2i-j-k`; `#` comments.
std::vector<CycleEquation> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::vector<CycleEquation> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        int len;
        std::string text;
        if (!(fields >> len >> text)) throw std::runtime_error("malformed fixture line: " + line);
        CycleEquation eq;
        eq.cycle_len = len;
        eq.coeffs = canonicalize_coefficients(parse_equation_text(text));
        out.push_back(std::move(eq));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_equations(const std::string& rows, int max_len, const std::string& fixture) {
    const auto row_labels = parse_int_list(rows);
    const auto by_len = governing_equations(row_labels, max_len);
    for (const auto& [len, eqs] : by_len) {
        for (const auto& eq : eqs) std::cout << format_equation(eq) << '\n';
    }
    for (const auto& [len, eqs] : by_len) {
        std::cout << "# " << eqs.size() << " equations at cycle length " << len << '\n';
    }
    if (has_unavoidable_cycles(row_labels, 8)) {
        std::cout << "# eight-cycles unavoidable for these row labels\n";
    }
    if (!fixture.empty()) {
        auto expected = load_fixture(fixture);
        auto got = flatten(by_len);
        std::sort(got.begin(), got.end());
        if (got != expected) {
            std::cerr << "fixture mismatch: expected " << expected.size() << " equations, derived "
                      << got.size() << '\n';
            for (const auto& eq : expected) {
                if (std::find(got.begin(), got.end(), eq) == got.end()) {
                    std::cerr << "  missing: " << format_equation(eq) << '\n';
                }
            }
            for (const auto& eq : got) {
                if (std::find(expected.begin(), expected.end(), eq) == expected.end()) {
                    std::cerr << "  spurious: " << format_equation(eq) << '\n';
                }
            }
            return kExitFixtureMismatch;
        }
        std::cout << "# fixture match: " << fixture << '\n';
    }
    return kExitOk;
}

void print_sequence(const LabelSequence& seq, Modulus q, bool as_json) {
    if (as_json) {
        nlohmann::ordered_json doc;
        doc["q"] = seq.q;
        doc["values"] = seq.values;
        nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
        for (const auto& eq : seq.certificate) {
            eqs.push_back({{"coeffs", eq.coeffs},
                           {"cycle_len", eq.cycle_len},
                           {"solutions", find_proper_solutions(eq.coeffs, q, seq.values).size()}});
        }
        doc["certificate"] = eqs;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::cout << "sequence (" << seq.values.size() << " values):";
    for (int v : seq.values) std::cout << ' ' << v;
    std::cout << "\ncertificate: " << seq.certificate.size() << " equations\n";
    for (const auto& eq : seq.certificate) {
        const auto sols = find_proper_solutions(eq.coeffs, q, seq.values);
        std::cout << "  " << format_equation(eq) << "  solutions=" << sols.size() << '\n';
    }
}

int cmd_search(std::uint32_t q_raw, const std::string& rows, int max_len, const std::string& seed,
               std::size_t target, const std::string& method, int behrend_n, bool as_json) {
    Modulus q(q_raw);
    const auto equations = flatten(governing_equations(parse_int_list(rows), max_len));

    if (method == "greedy") {
        const auto res = greedy_extend(q, equations, parse_int_list(seed), target);
        print_sequence(res.sequence, q, as_json);
        if (!res.reached_target) {
            std::cout << "exhausted: no admissible extension below q\n";
        }
        return kExitOk;
    }
    if (method == "bosznay") {
        print_sequence(bosznay_pipeline(q, equations), q, as_json);
        return kExitOk;
    }
    if (method == "behrend") {
        EquationSystemForm9 system;
        for (const auto& eq : equations) {
            if (!matches_form9(eq.coeffs)) continue;
            std::vector<int> c;
            int b = 0;
            int pos = 0, neg = 0;
            for (int v : eq.coeffs) (v > 0 ? pos : neg) += 1;
            const int sign = pos >= neg ? 1 : -1;  // orient so the lone coefficient becomes b
            for (int v : eq.coeffs) {
                if (sign * v > 0) c.push_back(sign * v);
                else b = -sign * v;
            }
            system.rows.emplace_back(std::move(c), b);
        }
        if (system.rows.empty()) throw std::invalid_argument("no form-compatible equations to avoid");
        print_sequence(behrend_construct(q, system, behrend_n), q, as_json);
        return kExitOk;
    }
    throw std::invalid_argument("unknown method: " + method);
}

int cmd_analyze(const std::string& spec_path, int count_len, std::uint64_t cap) {
    const auto spec = load_spec_file(spec_path);
    const auto h = build_parity_check(spec);
    const int g = girth(h);
    std::cout << "q=" << spec.q.value() << " r=" << spec.r() << " s=" << spec.s()
              << (spec.mask ? " masked" : "") << '\n';
    std::cout << "girth: ";
    if (g == kAcyclic) std::cout << "acyclic\n";
    else std::cout << g << '\n';

    if (!spec.mask && spec.r() >= 3 && spec.s() >= 3) {
        const int predicted = predict_girth(spec);
        std::cout << "predicted girth: " << predicted << '\n';
        if (predicted != g) {
            std::cerr << "invariant violation: predicted girth " << predicted
                      << " disagrees with graph girth " << g << '\n';
            return kExitInvariant;
        }
        std::cout << "prediction agrees with graph search\n";
    }
    if (spec.mask) {
        const int bg = block_graph_girth(*spec.mask);
        std::cout << "block-graph girth: ";
        if (bg == kAcyclic) std::cout << "acyclic";
        else std::cout << bg;
        std::cout << (bg > 6 ? " (no six-block twelve-cycle support)" : "") << '\n';
    }
    if (count_len > 0) {
        const auto counts = count_cycles(h, count_len, cap);
        for (const auto& [len, cnt] : counts) {
            std::cout << "cycles of length " << len << ": " << cnt << '\n';
        }
    }
    return kExitOk;
}

int cmd_bounds(long long q, int r, int g, int l, int d) {
    const auto rep = bound_report(q, r, g, l > 0 ? std::optional<int>(l) : std::nullopt,
                                  d > 0 ? std::optional<int>(d) : std::nullopt);
    std::cout << std::fixed << std::setprecision(2);
    std::cout << "q=" << rep.q << " r=" << rep.r << " g=" << rep.g << '\n';
    std::cout << "min distance lower (tree bound, even): " << rep.dmin_lower << '\n';
    std::cout << "min distance upper ((r+1)!): " << rep.dmin_upper << '\n';
    if (rep.g == 8 || rep.g == 10) {
        std::cout << "block-column cap (Moore-type): " << rep.moore_cap << '\n';
    }
    if (rep.sidon_cap) {
        std::cout << "block-column cap (Sidon): " << *rep.sidon_cap << " (floor "
                  << static_cast<long long>(*rep.sidon_cap) << ")\n";
    }
    if (rep.hyper_lower) {
        std::cout << "avoiding-set lower (hypergraph): " << *rep.hyper_lower << " (ceil "
                  << static_cast<long long>(std::ceil(*rep.hyper_lower)) << ")\n";
    }
    if (rep.behrend_bound) {
        std::cout << "avoiding-set lower (Behrend main term): " << *rep.behrend_bound << '\n';
    }
    return kExitOk;
}

int cmd_simulate(const std::string& spec_path, const std::string& ebno, int max_iters,
                 std::uint64_t min_word_errors, std::uint64_t max_frames, std::uint64_t seed,
                 const std::string& csv_path, int workers) {
    const auto spec = load_spec_file(spec_path);
    const auto h = build_parity_check(spec);
    DecoderConfig cfg;
    cfg.max_iterations = max_iters;
    StopRule stop{min_word_errors, max_frames};
    const auto report = monte_carlo(h, designed_rate(spec), parse_double_list(ebno), cfg, stop,
                                    seed, workers);
    const std::string csv = simulation_csv(report);
    std::cout << "n=" << report.n << " designed_rate=" << report.designed_rate.num << '/'
              << report.designed_rate.den << " actual_rate=" << report.actual_rate.num << '/'
              << report.actual_rate.den << '\n';
    std::cout << csv;
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open output file: " + csv_path);
        out << csv;
        std::cout << "wrote " << csv_path << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-cyclic array LDPC construction, cycle analysis and simulation"};
    app.require_subcommand(1);

    std::uint32_t q = 0;
    std::string rows, cols, mask_file, out_path, alist_path, fixture, seed = "0,1";
    std::string method = "greedy", spec_path, ebno, csv_path;
    int max_len = 8, behrend_n = 3, count_len = 0, r = 3, g = 6, l = 0, d = 0;
    int max_iters = 30, workers = 0;
    std::size_t target = 0;
    std::uint64_t min_word_errors = 100, max_frames = 1'000'000, master_seed = 1;
    std::uint64_t cycle_cap = 1'000'000'000ULL;
    long long qll = 0;
    bool as_json = false;

    auto* construct = app.add_subcommand("construct", "Build a code spec and optional alist");
    construct->add_option("--q", q, "odd prime modulus")->required();
    construct->add_option("--rows", rows, "comma-separated block-row labels")->required();
    construct->add_option("--cols", cols, "comma-separated block-column labels")->required();
    construct->add_option("--mask-file", mask_file, "0/1 rows, whitespace separated");
    construct->add_option("--out", out_path, "spec JSON output path")->required();
    construct->add_option("--alist", alist_path, "expanded parity-check output path");

    auto* equations = app.add_subcommand("equations", "Derive cycle-governing equations");
    equations->add_option("--rows", rows, "comma-separated block-row labels")->required();
    equations->add_option("--max-len", max_len, "6, 8 or 10")->default_val(8);
    equations->add_option("--fixture", fixture, "diff against a transcription file");

    auto* search = app.add_subcommand("search", "Find solution-avoiding label sequences");
    search->add_option("--q", q, "odd prime modulus")->required();
    search->add_option("--equations-from-rows", rows, "row labels generating the equation set")
        ->required();
    search->add_option("--max-len", max_len, "6, 8 or 10")->default_val(8);
    search->add_option("--seed", seed, "comma-separated greedy seed")->default_val("0,1");
    search->add_option("--target", target, "target sequence length (greedy)");
    search->add_option("--method", method, "greedy | bosznay | behrend")->default_val("greedy");
    search->add_option("--n", behrend_n, "digit cap for the Behrend construction")->default_val(3);
    search->add_flag("--json", as_json, "emit JSON instead of plain text");

    auto* analyze = app.add_subcommand("analyze", "Girth and cycle census of a spec");
    analyze->add_option("--spec", spec_path, "spec JSON path")->required();
    analyze->add_option("--count-cycles", count_len, "count cycles up to this length");
    analyze->add_option("--expansion-cap", cycle_cap, "node-expansion budget for counting");

    auto* bounds = app.add_subcommand("bounds", "Evaluate distance and set-size bounds");
    bounds->add_option("--q", qll, "modulus")->required();
    bounds->add_option("--r", r, "column weight")->required();
    bounds->add_option("--g", g, "girth in {6,8,10,12}")->required();
    bounds->add_option("--l", l, "number of avoided constraints (hypergraph bound)");
    bounds->add_option("--D", d, "max constraint coefficient (Behrend bound)");

    auto* simulate = app.add_subcommand("simulate", "AWGN Monte Carlo with BP decoding");
    simulate->add_option("--spec", spec_path, "spec JSON path")->required();
    simulate->add_option("--ebno", ebno, "comma-separated Eb/N0 points in dB")->required();
    simulate->add_option("--max-iters", max_iters, "decoder iterations")->default_val(30);
    simulate->add_option("--min-word-errors", min_word_errors)->default_val(100);
    simulate->add_option("--max-frames", max_frames)->default_val(1'000'000);
    simulate->add_option("--seed", master_seed, "master seed")->default_val(1);
    simulate->add_option("--csv", csv_path, "CSV output path");
    simulate->add_option("--workers", workers, "0 = hardware concurrency")->default_val(0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            return cmd_construct(q, rows, cols, mask_file, out_path, alist_path);
        }
        if (equations->parsed()) return cmd_equations(rows, max_len, fixture);
        if (search->parsed()) {
            return cmd_search(q, rows, max_len, seed, target, method, behrend_n, as_json);
        }
        if (analyze->parsed()) return cmd_analyze(spec_path, count_len, cycle_cap);
        if (bounds->parsed()) return cmd_bounds(qll, r, g, l, d);
        if (simulate->parsed()) {
            return cmd_simulate(spec_path, ebno, max_iters, min_word_errors, max_frames,
                                master_seed, csv_path, workers);
        }
    } catch (const arraycode::CycleBudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
