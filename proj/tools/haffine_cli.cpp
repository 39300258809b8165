#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "haff/checks.hpp"
#include "haff/gallery.hpp"
#include "haff/json_io.hpp"
#include "haff/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidSpec = 3;

struct GlobalFlags {
    bool as_json = false;
    uint64_t seed = 20240517;
    int trials = 100;
};

void print_report(const haff::AnalysisReport& rep, bool as_json) {
    if (as_json)
        std::cout << haff::report_to_json(rep).dump(2) << "\n";
    else
        std::cout << haff::report_to_text(rep);
}

int run_analysis(const haff::CarnotPresentation& pres, const haff::AnalyzeOptions& opts, bool as_json) {
    print_report(haff::analyze(pres, opts), as_json);
    return kExitOk;
}

int cmd_analyze(const std::string& path, const haff::AnalyzeOptions& opts, const GlobalFlags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitUsage;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "JSON parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        return run_analysis(haff::presentation_from_json(j), opts, flags.as_json);
    } catch (const haff::SpecValidationError& e) {
        std::cerr << "invalid group spec: " << e.what() << "\n";
        return kExitInvalidSpec;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad group spec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "malformed group spec: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_free(int n, const haff::AnalyzeOptions& opts, const GlobalFlags& flags) {
    if (n > 10) std::cerr << "note: rank " << n << " has 2^" << n << " basis maps; this may take a while\n";
    try {
        return run_analysis(haff::CarnotPresentation::free_group(n), opts, flags.as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_examples(const std::string& name, bool all, bool emit, const GlobalFlags& flags) {
    std::vector<const haff::GalleryEntry*> selected;
    if (all) {
        for (const auto& e : haff::gallery()) selected.push_back(&e);
    } else {
        const auto* e = haff::find_gallery(name);
        if (!e) {
            std::cerr << "unknown example \"" << name << "\"; known names:";
            for (const auto& g : haff::gallery()) std::cerr << " " << g.name;
            std::cerr << "\n";
            return kExitUsage;
        }
        selected.push_back(e);
    }
    if (emit) {
        if (selected.size() != 1) {
            std::cerr << "--emit takes a single example name\n";
            return kExitUsage;
        }
        std::cout << haff::free_quotient_to_json(selected[0]->make()).dump(2) << "\n";
        return kExitOk;
    }
    bool ok = true;
    for (const auto* e : selected) {
        const haff::GalleryCheckResult r = haff::run_gallery_entry(*e, flags.seed, flags.trials);
        ok = ok && r.ok;
        std::cout << (r.ok ? "[ok]      " : "[MISMATCH] ") << e->name << " (" << e->summary << ")\n";
        if (!r.detail.empty()) std::cout << "           " << r.detail << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_check(const GlobalFlags& flags) {
    bool ok = true;
    for (const auto& r : haff::run_all_checks(flags.seed, flags.trials)) {
        ok = ok && r.pass;
        std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact h-affine analysis of step-two Carnot groups"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.as_json, "emit machine-readable JSON on stdout");
    app.add_option("--seed", flags.seed, "seed for randomized checks");
    app.add_option("--trials", flags.trials, "trial count for randomized checks")->check(CLI::PositiveNumber);

    haff::AnalyzeOptions opts;
    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a group-spec JSON file");
    analyze_cmd->fallthrough();
    analyze_cmd->add_option("file", path, "group-spec JSON path")->required();
    analyze_cmd->add_flag("--basis", opts.with_basis, "list a basis of the h-affine maps");
    analyze_cmd->add_flag("--witness", opts.with_witness, "include a bilinear witness when one exists");
    analyze_cmd->add_flag("--f3", opts.with_f3, "include a rank-3 generating triple when one exists");

    int free_n = 0;
    auto* free_cmd = app.add_subcommand("free", "analyze the free group of a given rank");
    free_cmd->fallthrough();
    free_cmd->add_option("n", free_n, "rank, between 2 and 16")->required()->check(CLI::Range(2, 16));
    free_cmd->add_flag("--basis", opts.with_basis, "list a basis of the h-affine maps");
    free_cmd->add_flag("--witness", opts.with_witness, "include a bilinear witness when one exists");
    free_cmd->add_flag("--f3", opts.with_f3, "include a rank-3 generating triple when one exists");

    std::string example_name;
    bool examples_all = false;
    bool examples_emit = false;
    auto* examples_cmd = app.add_subcommand("examples", "run the worked-example gallery");
    examples_cmd->fallthrough();
    examples_cmd->add_option("name", example_name, "gallery entry name");
    examples_cmd->add_flag("--all", examples_all, "run every gallery entry");
    examples_cmd->add_flag("--emit", examples_emit, "print the entry's group spec as free_quotient JSON");

    auto* check_cmd = app.add_subcommand("check", "run the randomized property suites");
    check_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (analyze_cmd->parsed()) return cmd_analyze(path, opts, flags);
    if (free_cmd->parsed()) return cmd_free(free_n, opts, flags);
    if (examples_cmd->parsed()) {
        if (!examples_all && example_name.empty()) {
            std::cerr << "examples: give a name or --all\n";
            return kExitUsage;
        }
        return cmd_examples(example_name, examples_all, examples_emit, flags);
    }
    if (check_cmd->parsed()) return cmd_check(flags);
    return kExitUsage;
}
