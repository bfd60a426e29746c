#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "matchfab/report.hpp"

namespace {

using namespace matchfab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitCapExceeded = 3;

struct RunConfig {
    std::string family_name;
    int g = 1;
    int g_max = 0; // 0: single-generation run
    std::string format;
    bool oriented = false;
    std::string out;
    Caps caps;
};

Family parse_family(const std::string& name) {
    auto f = family_from_string(name);
    if (!f) throw CLI::ValidationError("--family", "expected fractal|nonfractal|sierpinski");
    return *f;
}

void apply_env_generation_cap(Caps& caps) {
    if (const char* env = std::getenv("MATCHFAB_MAX_G")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) caps.max_generation = static_cast<int>(v);
    }
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open output file: " + path);
    os << payload;
}

int cmd_generate(const RunConfig& cfg) {
    const Family family = parse_family(cfg.family_name);
    std::string format = cfg.format.empty() ? "edgelist" : cfg.format;
    if (format != "edgelist" && format != "dot" && format != "json")
        throw CLI::ValidationError("--format", "generate accepts edgelist|dot|json");
    if (cfg.oriented && family != Family::nonfractal)
        throw CLI::ValidationError("--oriented", "orientation exists for the nonfractal family only");
    if (cfg.oriented && cfg.out.empty() && format != "json")
        throw CLI::ValidationError("--oriented", "needs --out for the sidecar file (or --format json)");

    std::optional<OrientedGraph> oriented;
    Graph graph = [&] {
        switch (family) {
            case Family::fractal: return gen_fractal(cfg.g, cfg.caps.max_generation);
            case Family::sierpinski: return gen_sierpinski_ext(cfg.g, cfg.caps.max_generation);
            case Family::nonfractal: break;
        }
        if (cfg.oriented) {
            oriented = gen_nonfractal_oriented(cfg.g, cfg.caps.max_generation);
            return oriented->base();
        }
        return gen_nonfractal(cfg.g, cfg.caps.max_generation);
    }();

    std::string payload;
    if (format == "edgelist") {
        payload = to_edge_list(graph);
    } else if (format == "dot") {
        payload = to_dot(graph);
    } else {
        Json j = graph_to_json(graph);
        j["g"] = cfg.g;
        if (oriented) {
            Json dir = Json::array();
            for (const auto& de : oriented->directed_edges())
                dir.push_back(Json::array({de.tail, de.head}));
            j["orientation"] = dir;
        }
        payload = j.dump(2) + "\n";
    }
    write_output(cfg.out, payload);
    if (oriented && format != "json")
        write_output(cfg.out + ".orient", orientation_sidecar(*oriented));
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const Family family = parse_family(cfg.family_name);
    const VerifyResult result = run_verify(family, cfg.g, cfg.caps);
    write_output(cfg.out, verify_to_json(family, cfg.g, result).dump(2) + "\n");
    if (result.any_failed()) return kExitVerifyFailed;
    if (result.any_skipped()) return kExitCapExceeded;
    return kExitOk;
}

int cmd_report(const RunConfig& cfg) {
    const Family family = parse_family(cfg.family_name);
    const int g_min = cfg.g;
    const int g_max = cfg.g_max > 0 ? cfg.g_max : cfg.g;
    if (g_max < g_min) throw CLI::ValidationError("--g-max", "must be >= --g");
    std::string format = cfg.format.empty() ? "table" : cfg.format;
    if (format != "table" && format != "json")
        throw CLI::ValidationError("--format", "report accepts table|json");

    if (format == "table") {
        write_output(cfg.out, report_table(family, g_min, g_max, cfg.caps));
    } else {
        Json rows = Json::array();
        for (int g = g_min; g <= g_max; ++g) rows.push_back(report_row(family, g, cfg.caps));
        write_output(cfg.out, rows.dump(2) + "\n");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    apply_env_generation_cap(cfg.caps);

    CLI::App app{"matchfab: exact matchings in two scale-free graph families"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* cmd, bool needs_g) {
        cmd->add_option("--family", cfg.family_name, "fractal|nonfractal|sierpinski")->required();
        auto* gopt = cmd->add_option("--g", cfg.g, "generation (>= 1)")->check(CLI::PositiveNumber);
        if (needs_g) gopt->required();
        cmd->add_option("--enum-cap", cfg.caps.enum_edges, "max edges for exhaustive enumeration");
        cmd->add_option("--det-cap", cfg.caps.det_order, "max matrix order for exact determinants");
        cmd->add_option("--cycle-cap", cfg.caps.cycle_count, "max enumerated cycles");
        cmd->add_option("--out", cfg.out, "output path (stdout when omitted)");
    };

    auto* generate = app.add_subcommand("generate", "construct a graph and write it out");
    add_common(generate, true);
    generate->add_option("--format", cfg.format, "edgelist|dot|json");
    generate->add_flag("--oriented", cfg.oriented, "also emit the H_g^e orientation");

    auto* verify = app.add_subcommand("verify", "run all analytic-vs-empirical cross-checks");
    add_common(verify, true);

    auto* report = app.add_subcommand("report", "closed-form and empirical values per generation");
    add_common(report, true);
    report->add_option("--g-max", cfg.g_max, "upper generation of the range")
        ->check(CLI::PositiveNumber);
    report->add_option("--format", cfg.format, "table|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (generate->parsed()) return cmd_generate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (report->parsed()) return cmd_report(cfg);
        return kExitBadArgs;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
