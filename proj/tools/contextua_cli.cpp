// contextua command-line front end: bench evaluation, correlations and S
// values, angle sweeps, the product-state bound audit, and the operator
// contradiction check. All output is deterministic given the flags.
//
// Exit codes: 0 success / claim confirmed, 1 physics assertion failed,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "contextua/bench.hpp"
#include "contextua/chsh.hpp"
#include "contextua/kochen_specker.hpp"
#include "contextua/states.hpp"

namespace {

using namespace contextua;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kExitOk = 0;
constexpr int kExitPhysics = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CONTEXTUA_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "warning: ignoring malformed CONTEXTUA_SEED '" << env << "'\n";
    }
    return kDefaultSeed;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open bench file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

BeamState load_bench(const std::string& path) {
    // ParseError escapes to the caller, which renders file:line:col
    return evaluate(parse(read_file(path)));
}

BeamState pick_state(const std::string& state_name, const std::string& bench_path) {
    if (!bench_path.empty()) return load_bench(bench_path);
    if (state_name == "phi+") return bell_state(BellKind::PhiPlus, 1.0);
    if (state_name == "phi-") return bell_state(BellKind::PhiMinus, 1.0);
    if (state_name == "psi+") return bell_state(BellKind::PsiPlus, 1.0);
    if (state_name == "psi-") return bell_state(BellKind::PsiMinus, 1.0);
    throw CLI::ValidationError("--state", "unknown state '" + state_name + "'");
}

BellKind pick_bell(const std::string& state_name) {
    if (state_name == "phi+") return BellKind::PhiPlus;
    if (state_name == "phi-") return BellKind::PhiMinus;
    if (state_name == "psi+") return BellKind::PsiPlus;
    if (state_name == "psi-") return BellKind::PsiMinus;
    throw CLI::ValidationError("--state", "unknown state '" + state_name + "'");
}

double parse_angle_flag(const std::string& text, const char* flag) {
    auto n = parse_number_literal(text);
    if (!n) throw CLI::ValidationError(flag, "malformed angle '" + text + "'");
    return n->value;
}

AngleSet parse_angle_set(const std::string& csv) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) {
        throw CLI::ValidationError("--angles", "expected theta1,theta2,phi1,phi2");
    }
    return AngleSet{parse_angle_flag(parts[0], "--angles"), parse_angle_flag(parts[1], "--angles"),
                    parse_angle_flag(parts[2], "--angles"), parse_angle_flag(parts[3], "--angles")};
}

int cmd_run(const std::string& file, const std::string& out_path) {
    const BeamState state = load_bench(file);
    nlohmann::json j;
    j["state"] = nlohmann::json::parse(state_to_json(state));
    j["norm"] = state.amplitudes.norm();
    j["separable"] = schmidt_separable(state, 1e-12);
    emit(j.dump(2), out_path);
    return kExitOk;
}

int cmd_chsh(const std::string& state_name, const std::string& bench_path,
             const std::string& angles_csv, const std::string& out_path) {
    const BeamState state = pick_state(state_name, bench_path);
    const AngleSet angles = parse_angle_set(angles_csv);
    const ChshResult r = chsh_value(state, angles);
    emit(r.to_json(2), out_path);
    return kExitOk;
}

int cmd_scan(const std::string& state_name, int grid, const std::string& mode,
             const std::string& out_path) {
    const ScanMode m = (mode == "full") ? ScanMode::FullGrid : ScanMode::Slice;
    const auto rows = violation_scan(pick_bell(state_name), grid, m);
    emit(scan_to_csv(rows), out_path);
    return kExitOk;
}

int cmd_bound_sample(std::uint64_t n, std::uint64_t seed, const std::string& out_path) {
    const BoundSampleReport rep = product_bound_sample(n, seed);
    emit(rep.to_json(2), out_path);
    return rep.any_violation ? kExitPhysics : kExitOk;
}

int cmd_ks_check(bool tamper, const std::string& out_path) {
    auto ops = ks_operators();
    if (tamper) {
        // flip a matrix element the state actually exercises so the first
        // relation stops being an eigenrelation and the residual path fires
        ops[static_cast<std::size_t>(KsLabel::JxPath)].matrix.at(2, 0) *= -1.0;
    }
    try {
        const KsReport rep = eigen_verify(ops, bell_state(BellKind::PhiMinus, 1.0));
        emit(rep.to_json(2), out_path);
        return rep.contradiction ? kExitOk : kExitPhysics;
    } catch (const std::runtime_error& e) {
        std::cerr << "ks-check failed: " << e.what() << "\n";
        return kExitPhysics;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical path/polarization beam simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout")
        ->capture_default_str();

    auto* run = app.add_subcommand("run", "evaluate a bench file and print the final state");
    std::string run_file;
    run->add_option("file", run_file, "bench description (.bench)")->required();

    auto* chsh = app.add_subcommand("chsh", "S value for one angle set");
    std::string chsh_state = "phi+";
    std::string chsh_bench;
    std::string chsh_angles;
    chsh->add_option("--state", chsh_state, "phi+ | phi- | psi+ | psi-")->capture_default_str();
    chsh->add_option("--bench", chsh_bench, "take the state from a bench file instead");
    chsh->add_option("--angles", chsh_angles, "theta1,theta2,phi1,phi2 (pi literals allowed)")
        ->required();

    auto* scan = app.add_subcommand("scan", "sweep S over analyzer angles, CSV output");
    std::string scan_state = "phi+";
    int scan_grid = 0;
    std::string scan_mode = "slice";
    scan->add_option("--state", scan_state, "phi+ | phi- | psi+ | psi-")->capture_default_str();
    scan->add_option("--grid", scan_grid, "points per axis (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    scan->add_option("--mode", scan_mode, "slice (theta1=0, theta2=pi/2, phi1=x, phi2=-x) or full")
        ->check(CLI::IsMember({"slice", "full"}))
        ->capture_default_str();

    auto* bound = app.add_subcommand("bound-sample", "random product-state audit of |S| <= 2");
    std::uint64_t bound_n = 0;
    std::uint64_t seed = default_seed();
    bound->add_option("--n", bound_n, "number of draws (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    bound->add_option("--seed", seed, "RNG seed (default 42, or CONTEXTUA_SEED)")
        ->capture_default_str();

    auto* ks = app.add_subcommand("ks-check", "operator contradiction report");
    bool tamper = false;
    ks->add_flag("--tamper", tamper, "corrupt one operator to exercise the failure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_file, out_path);
        if (chsh->parsed()) return cmd_chsh(chsh_state, chsh_bench, chsh_angles, out_path);
        if (scan->parsed()) return cmd_scan(scan_state, scan_grid, scan_mode, out_path);
        if (bound->parsed()) return cmd_bound_sample(bound_n, seed, out_path);
        if (ks->parsed()) return cmd_ks_check(tamper, out_path);
    } catch (const ParseError& e) {
        const std::string file = run->parsed() ? run_file : chsh_bench;
        std::cerr << file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
