#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hypx/runner.hpp"

namespace {

// --a 5 --b 2/3 style parameter options shared by several subcommands.
void add_param_options(CLI::App* cmd, std::map<std::string, std::string>& params) {
    for (const char* name : {"a", "b", "c", "d", "e", "f", "w", "A", "B", "C", "D", "E", "F",
                             "theta_over_pi", "sign"}) {
        cmd->add_option_function<std::string>(
            std::string("--") + name,
            [&params, key = std::string(name)](const std::string& v) { params[key] = v; },
            "parameter " + std::string(name) + " (exact rational, e.g. -7/2)");
    }
}

unsigned default_precision_bits() {
    if (const char* env = std::getenv("HYPX_PRECISION_BITS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 64) return static_cast<unsigned>(v);
    }
    return 256;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypx: exact verification of extended hypergeometric transformations"};
    app.require_subcommand(1);

    hypx::RunConfig cfg;
    cfg.precision_bits = default_precision_bits();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--precision-bits", cfg.precision_bits, "working precision in bits");
    };

    auto* qpoly = app.add_subcommand("qpoly", "print a polynomial family member");
    qpoly->add_option("--family", cfg.name, "Q2 | Q3 | Q3p | BQ2 | BQ3 | BQ3p | hatQ2 | P")
        ->required();
    qpoly->add_option("--k", cfg.k, "extension level")->required();
    add_param_options(qpoly, cfg.params);
    add_common(qpoly);

    auto* roots = app.add_subcommand("roots", "print the negated roots of a family member");
    roots->add_option("--family", cfg.name, "Q2 | Q3 | Q3p | BQ2 | BQ3 | BQ3p | hatQ2 | P")
        ->required();
    roots->add_option("--k", cfg.k, "extension level")->required();
    add_param_options(roots, cfg.params);
    add_common(roots);

    auto* series = app.add_subcommand("series", "inspect a weighted series description");
    series->add_option("--describe", cfg.series_json,
                       R"(JSON: {"upper":["1/2"],"lower":[],"weight":["1","2"],"scale":"1"})")
        ->required();
    series->add_option("--order", cfg.order, "truncation order N");
    add_common(series);

    auto* vt = app.add_subcommand("verify-transform", "verify one registry identity");
    vt->add_option("--name", cfg.name, "identity name (see README for the catalog)")->required();
    vt->add_option("--k", cfg.k, "extension level");
    vt->add_option("--order", cfg.order, "truncation order N");
    vt->add_option("--mutate", [&cfg](const std::vector<std::string>& v) {
        cfg.mutate = v.back();
        return true;
    }, "testing aid: perturb one stored entry by 1/7 (site name)");
    add_param_options(vt, cfg.params);
    add_common(vt);

    auto* vn = app.add_subcommand("verify-novelty", "verify the series-level raising identity");
    vn->add_option("--family", cfg.name, "Q2 | Q3 | Q3p")->required();
    vn->add_option("--k", cfg.k, "extension level (>= 1)")->required();
    vn->add_option("--order", cfg.order, "truncation order N");
    add_param_options(vn, cfg.params);
    add_common(vn);

    auto* vs = app.add_subcommand("verify-summation", "verify one summation identity");
    vs->add_option("--name", cfg.name,
                   "sheppard | whipple43 | rforms | ext-whipple | bailey1 | bailey2 | kummer | "
                   "gs-pairing")
        ->required();
    vs->add_option("--k", cfg.k, "extension level");
    vs->add_option("--N", cfg.size_n, "termination size N");
    vs->add_option("--m", cfg.size_m, "termination size m");
    vs->add_option("--variant", cfg.variant, "i or ii")->check(CLI::IsMember({"i", "ii"}));
    add_param_options(vs, cfg.params);
    add_common(vs);

    auto* suite = app.add_subcommand("suite", "run the full verification battery");
    suite->add_option("--k-max", cfg.k_max, "largest extension level");
    suite->add_option("--cases", cfg.cases, "random parameter tuples per identity");
    suite->add_option("--order", cfg.order, "truncation order N");
    suite->add_option("--seed", cfg.seed, "random seed (reports echo it)");
    add_common(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return hypx::run(cfg, std::cout, std::cerr);
}
