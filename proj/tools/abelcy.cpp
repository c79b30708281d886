#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abelcy/experiments.hpp"
#include "abelcy/groebner.hpp"
#include "abelcy/hilbert.hpp"

using namespace abelcy;

namespace {

void add_config_flags(CLI::App* app, Config& cfg) {
    app->add_option("--prime", cfg.prime, "working prime (default: smallest p > 10^4, p = 1 mod 840)");
    app->add_option("--seed", cfg.seed, "random seed");
    app->add_option("--retries", cfg.retry_budget, "retry budget for degenerate parameters");
    app->add_option("--budget-pairs", cfg.pair_budget, "S-pair budget per Groebner basis");
    app->add_option("--budget-minors", cfg.minor_budget, "minor budget per singular scheme");
    app->add_flag("--force", cfg.force, "run stretch claims that exceed the default budgets");
    app->add_option("--cache", cfg.cache_dir, "Groebner basis cache directory");
    app->add_flag("--no-timing", [&cfg](int64_t) { cfg.timing = false; },
                  "zero the millis fields for byte-stable reports");
}

void emit(const std::vector<ExperimentReport>& reports, const std::string& out,
          const std::string& format) {
    std::string text = format == "json" ? report_to_json(reports) : report_to_text(reports);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file(out, text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelcy: exact verification of the Heisenberg-invariant Calabi-Yau threefolds"};
    app.require_subcommand(1);

    Config cfg;
    std::string out, format = "text", case_sel = "all";

    auto* verify = app.add_subcommand("verify", "run the per-polarization verification cases");
    add_config_flags(verify, cfg);
    verify->add_option("--case", case_sel, "case tag (1_4, 1_5, 1_6, 1_7, 1_8, 1_10) or 'all'");
    verify->add_option("--out", out, "output path (default stdout)");
    verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* identities = app.add_subcommand("identities", "run the exact symbolic identity suite");
    add_config_flags(identities, cfg);
    identities->add_option("--out", out, "output path (default stdout)");
    identities->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* gbcmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal read from a file");
    std::string ring_spec = "Fp[x0..x5]", order_name = "grevlex", in_file;
    gbcmd->add_option("--ring", ring_spec, "ring, e.g. Fp[x0..x7], F31991[x0..x4], Q[x0,x1]");
    gbcmd->add_option("--order", order_name, "grevlex or lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    gbcmd->add_option("--in", in_file, "input file, one polynomial per line, # comments")
        ->required();
    add_config_flags(gbcmd, cfg);

    auto* cachecmd = app.add_subcommand("cache", "inspect or clear the Groebner cache");
    std::string cache_dir_arg;
    bool do_clear = false;
    cachecmd->add_option("dir", cache_dir_arg, "cache directory")->required();
    cachecmd->add_flag("--clear", do_clear, "remove all cached bases");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*identities) {
            auto rep = identity_suite(cfg);
            emit({rep}, out, format);
            return rep.ok() ? 0 : 1;
        }
        if (*verify) {
            std::vector<ExperimentReport> reports;
            bool ok = true;
            std::vector<std::string> tags;
            if (case_sel == "all") {
                tags = case_tags();
            } else {
                tags.push_back(case_sel);
            }
            for (const auto& tag : tags) {
                reports.push_back(run_case(tag, cfg));
                ok = ok && reports.back().ok();
            }
            emit(reports, out, format);
            return ok ? 0 : 1;
        }
        if (*gbcmd) {
            Order order{order_name == "lex" ? OrderKind::lex : OrderKind::grevlex};
            auto ring = Ring::from_spec(ring_spec,
                                        cfg.prime ? cfg.prime : default_experiment_prime(), order);
            std::ifstream in(in_file);
            if (!in) throw IoError("cannot open " + in_file);
            std::vector<Polynomial> gens;
            std::string line;
            while (std::getline(in, line)) {
                auto hash_pos = line.find('#');
                if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                gens.push_back(Polynomial::parse(line, ring));
            }
            Budget budget;
            budget.max_pairs = cfg.pair_budget;
            Ideal I(ring, gens);
            GBCache cache(cfg.cache_dir);
            auto G = buchberger_cached(I, budget,
                                       cfg.cache_dir.empty() ? nullptr : &cache);
            for (const auto& b : G.basis()) std::cout << b.format() << "\n";
            auto H = hilbert(G);
            std::cerr << "# basis size " << G.basis().size() << ", dimension " << H.dimension
                      << ", degree " << H.degree << "\n";
            return 0;
        }
        if (*cachecmd) {
            GBCache cache(cache_dir_arg);
            if (do_clear) {
                cache.clear();
                std::cout << "cache cleared\n";
            } else {
                for (const auto& f : cache.list()) std::cout << f << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
