// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace dfwalk::cli;

void add_input(CLI::App* app, InputConfig& in) {
    app->add_option("-i,--input", in.path, "Graph file, '-' for stdin")->capture_default_str();
    app->add_option("-f,--format", in.format, "edge-list | graph6 | matrix-market (default: by extension)");
    app->add_flag("--one-indexed", in.one_indexed, "Edge-list node ids start at 1");
    app->add_flag("--relabel", in.relabel, "Edge-list tokens are names, numbered by first appearance");
    app->add_option("--generate", in.generate,
                    "Use a generated graph: path:n complete:n cycle:n star:n trilattice:r:c er:n:p:seed");
}

void add_output(CLI::App* app, OutputFormat& out) {
    const std::map<std::string, OutputFormat> names{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    app->add_option("-o,--output", out, "csv | json")->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void add_common(CLI::App* app, CommonConfig& c, bool with_scheme) {
    add_input(app, c.input);
    add_output(app, c.output);
    if (with_scheme) {
        app->add_option("-s,--scheme", c.scheme, "exp | df | katz:<alpha> | shifted:<t>")->capture_default_str();
    }
    app->add_option("-b,--beta", c.beta, "Inverse temperature")->capture_default_str();
    app->add_flag("--exact-erf", c.exact_erf, "Use the exact erf form instead of the tanh form");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walk-based matrix functions and centralities of graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dfwalk 1.0.0");

    CommonConfig centrality;
    auto* c_cmd = app.add_subcommand("centrality", "Per-node subgraph centrality");
    add_common(c_cmd, centrality, true);
    c_cmd->add_flag("--log-domain", centrality.log_domain,
                    "Allow values beyond double range (value column left empty)");

    CommonConfig index;
    auto* i_cmd = app.add_subcommand("index", "Estrada indices, bounds, density and clustering");
    add_common(i_cmd, index, false);
    i_cmd->add_flag("--log-domain", index.log_domain, "Allow values beyond double range");

    CompareConfig compare;
    auto* cmp_cmd = app.add_subcommand("compare", "Rank correlation between two schemes");
    add_common(cmp_cmd, compare.common, false);
    cmp_cmd->add_option("--scheme-a", compare.scheme_a)->capture_default_str();
    cmp_cmd->add_option("--scheme-b", compare.scheme_b)->capture_default_str();
    cmp_cmd->add_flag("--nodes", compare.nodes, "Emit the per-node table instead of the summary");
    cmp_cmd->add_option("--pair", compare.pair, "Two nodes 'A,B' whose relative order is reported");

    ProfileConfig profile;
    auto* p_cmd = app.add_subcommand("profile", "Walk decay profile c_k tr(A^k)");
    add_input(p_cmd, profile.common.input);
    add_output(p_cmd, profile.common.output);
    p_cmd->add_option("-k,--k-max", profile.k_max)->capture_default_str()->check(CLI::Range(1L, 10000L));
    p_cmd->add_option("-s,--scheme", profile.schemes, "Repeatable")->capture_default_str();

    EnumerateConfig enumerate;
    auto* e_cmd = app.add_subcommand("enumerate", "Connected graphs on n nodes, or a graph6 catalog");
    e_cmd->add_option("-n", enumerate.n, "Node count (1..7 built in)");
    e_cmd->add_option("--from", enumerate.from, "graph6 catalog to read instead");
    e_cmd->add_option("--emit", enumerate.emit, "stats | graph6")->capture_default_str();
    e_cmd->add_option("-b,--beta", enumerate.beta)->capture_default_str();
    e_cmd->add_flag("--exact-erf", enumerate.exact_erf);
    add_output(e_cmd, enumerate.output);

    ScanConfig scan;
    auto* s_cmd = app.add_subcommand("scan-beta", "Top-fraction hits over a beta grid");
    add_common(s_cmd, scan.common, true);
    s_cmd->add_option("--labels", scan.labels, "node_id<TAB>0|1 file")->required();
    s_cmd->add_option("--fraction", scan.fraction)->capture_default_str()->check(CLI::Range(0.0, 1.0));
    s_cmd->add_option("--grid", scan.grid, "start:stop:step")->capture_default_str();

    RocConfig roc;
    auto* r_cmd = app.add_subcommand("roc", "ROC curve and AUC of a centrality against labels");
    add_common(r_cmd, roc.common, true);
    r_cmd->add_option("--labels", roc.labels, "node_id<TAB>0|1 file")->required();
    r_cmd->add_flag("--summary", roc.summary, "Emit only the AUC row");

    GenerateConfig generate;
    auto* g_cmd = app.add_subcommand("generate", "Write a generated graph");
    g_cmd->add_option("kind", generate.kind, "path:n complete:n cycle:n star:n trilattice:r:c er:n:p:seed")
        ->required();
    g_cmd->add_option("-f,--format", generate.format)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidConfig;
    }

    std::ostream& out = std::cout;
    std::ostream& err = std::cerr;
    return run_guarded(
        [&]() -> int {
            if (*c_cmd) {
                return cmd_centrality(centrality, out, err);
            }
            if (*i_cmd) {
                return cmd_index(index, out, err);
            }
            if (*cmp_cmd) {
                return cmd_compare(compare, out, err);
            }
            if (*p_cmd) {
                return cmd_profile(profile, out, err);
            }
            if (*e_cmd) {
                return cmd_enumerate(enumerate, out, err);
            }
            if (*s_cmd) {
                return cmd_scan_beta(scan, out, err);
            }
            if (*r_cmd) {
                return cmd_roc(roc, out, err);
            }
            return cmd_generate(generate, out, err);
        },
        err);
}
