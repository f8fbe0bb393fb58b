// lirlab: batch front-end for locally irregular colorings of 2-multigraphs.
//
//   lirlab color     read graph6 lines, emit a report per graph (and
//                    coloring files with --out)
//   lirlab verify    check a coloring file against a graph
//   lirlab lir       exact locally irregular chromatic index per graph
//   lirlab casecheck reproduce the exhaustive middle-part case check
//   lirlab gen       emit test families as graph6 lines
//   lirlab bench     CSV timing/search-node report per graph
//
// Graphs stream line-by-line on stdin (or from a file argument) so the tool
// composes with shell pipelines.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lir/casetable.hpp"
#include "lir/coloring_io.hpp"
#include "lir/families.hpp"
#include "lir/graph6.hpp"
#include "lir/oracle.hpp"
#include "lir/strategy.hpp"
#include "lir/verifier.hpp"

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw lir::error("cannot open " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty() && line[0] != '>') lines.push_back(line);
        else if (!line.empty() && line.rfind(">>graph6<<", 0) == 0) lines.push_back(line);
    }
    return lines;
}

long long env_budget() {
    const char* v = std::getenv("LIRLAB_BUDGET");
    if (!v) return lir::search_budget{}.max_nodes;
    return std::atoll(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally irregular edge colorings of 2-multigraphs"};
    app.require_subcommand(1);

    std::string input = "-", out_path, strategy = "auto", coloring_path;
    int kmax = 8;
    long long budget_nodes = env_budget();
    uint64_t seed = 1;
    bool deterministic = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "search node budget");
        cmd->add_flag("--deterministic", deterministic, "fix every tie-break for reproducible output");
    };

    auto* ccolor = app.add_subcommand("color", "construct verified colorings of ^2G");
    ccolor->add_option("input", input, "graph6 lines file (default stdin)");
    ccolor->add_option("--strategy", strategy,
                       "auto|regular|split|bipartite|subcubic-independent|subcubic3|planar4|long-paths|oracle");
    ccolor->add_option("--kmax", kmax, "oracle palette cap");
    ccolor->add_option("--out", out_path, "write coloring files here (concatenated)");
    add_common(ccolor);

    auto* cverify = app.add_subcommand("verify", "verify a coloring file against a graph");
    cverify->add_option("graph", input, "file with one graph6 line")->required();
    cverify->add_option("coloring", coloring_path, "coloring file")->required();

    auto* clir = app.add_subcommand("lir", "exact locally irregular chromatic index");
    clir->add_option("input", input, "graph6 lines file (default stdin)");
    clir->add_option("--kmax", kmax, "palette cap");
    add_common(clir);

    auto* ccase = app.add_subcommand("casecheck", "exhaustive middle-part case check");
    ccase->add_option("--out", out_path, "write the serialized table here");
    add_common(ccase);

    auto* cgen = app.add_subcommand("gen", "emit a test family as graph6 lines");
    std::string family = "cycle";
    int gn = 5, gd = 3;
    std::string dseq;
    cgen->add_option("--family", family,
                     "path|cycle|complete|wheel|bowtie|random-regular|subcubic|cubic|cubic-subdivided|split");
    cgen->add_option("-n", gn, "size parameter");
    cgen->add_option("-d", gd, "degree parameter (random-regular)");
    cgen->add_option("--dseq", dseq, "comma-separated pendant counts (split)");
    cgen->add_option("--seed", seed, "random seed");

    auto* cbench = app.add_subcommand("bench", "CSV report: graph_id,n,m,strategy,palette,nodes,ms");
    cbench->add_option("input", input, "graph6 lines file (default stdin)");
    cbench->add_option("--strategy", strategy, "strategy (default auto)");
    cbench->add_option("--kmax", kmax, "oracle palette cap");
    add_common(cbench);

    CLI11_PARSE(app, argc, argv);

    lir::search_budget budget{budget_nodes};
    try {
        if (*ccolor || *cbench) {
            bool bench = (bool)*cbench;
            std::ofstream out;
            if (!out_path.empty()) {
                out.open(out_path);
                if (!out) throw lir::error("cannot open " + out_path);
            }
            if (bench) std::cout << "graph_id,n,m,strategy,palette,nodes,ms\n";
            int id = 0;
            bool all_ok = true;
            for (const std::string& line : read_lines(input)) {
                lir::Multigraph g = lir::parse_graph6(line);
                lir::StrategyOptions opts;
                opts.strategy = strategy;
                opts.k_max = kmax;
                opts.budget = budget;
                opts.deterministic = deterministic;
                lir::StrategyOutcome res = lir::color_double_auto(g, opts);
                res.report.graph_id = "g" + std::to_string(id);
                if (bench) {
                    std::cout << res.report.graph_id << ',' << g.n << ',' << g.pairs.size() << ','
                              << res.report.strategy << ',' << res.report.palette << ','
                              << res.report.nodes << ',' << res.report.wall_ms << '\n';
                } else {
                    std::cout << res.report.graph_id << ' '
                              << (res.report.error.empty() ? res.report.strategy : "error") << ' '
                              << "palette=" << res.report.palette << ' '
                              << "verified=" << (res.report.verified ? "yes" : "no");
                    if (!res.report.error.empty()) std::cout << " (" << res.report.error << ")";
                    std::cout << '\n';
                }
                if (!res.report.error.empty() || !res.report.verified) all_ok = false;
                if (res.coloring && out.is_open())
                    out << lir::emit_coloring(lir::doubled(g), *res.coloring);
                ++id;
            }
            return all_ok ? 0 : 1;
        }
        if (*cverify) {
            auto lines = read_lines(input);
            if (lines.empty()) throw lir::error("no graph line");
            lir::Multigraph g = lir::parse_graph6(lines[0]);
            std::ifstream cf(coloring_path);
            if (!cf) throw lir::error("cannot open " + coloring_path);
            std::stringstream buf;
            buf << cf.rdbuf();
            // the coloring decides which graph it refers to: try ^2G first
            lir::Multigraph g2 = lir::doubled(g);
            lir::EdgeColoring c;
            lir::Multigraph* target = nullptr;
            try {
                c = lir::parse_coloring(buf.str(), g2);
                target = &g2;
            } catch (const lir::parse_error&) {
                c = lir::parse_coloring(buf.str(), g);
                target = &g;
            }
            auto rep = lir::verify(*target, c);
            if (rep.ok) {
                std::cout << "ok\n";
                return 0;
            }
            for (const auto& conf : rep.conflicts)
                std::cout << "conflict " << conf.u << ' ' << conf.v << " color " << conf.color << '\n';
            return 1;
        }
        if (*clir) {
            int id = 0;
            bool ok = true;
            for (const std::string& line : read_lines(input)) {
                lir::Multigraph g = lir::parse_graph6(line);
                try {
                    auto r = lir::exact_lir(g, kmax, budget);
                    std::cout << "g" << id << ' '
                              << (r.colorable ? std::to_string(r.value) : "uncolorable") << '\n';
                } catch (const lir::budget_error& e) {
                    std::cout << "g" << id << " unknown (" << e.what() << ")\n";
                    ok = false;
                }
                ++id;
            }
            return ok ? 0 : 1;
        }
        if (*ccase) {
            lir::CaseTable table = lir::middle_part_casecheck();
            int total = (int)table.extension.size();
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw lir::error("cannot open " + out_path);
                out << table.serialize();
            }
            std::cout << total << "/3375 extendable\n";
            return total == 3375 ? 0 : 1;
        }
        if (*cgen) {
            std::vector<lir::Multigraph> graphs;
            if (family == "path") graphs.push_back(lir::make_path(gn));
            else if (family == "cycle") graphs.push_back(lir::make_cycle(gn));
            else if (family == "complete") graphs.push_back(lir::make_complete(gn));
            else if (family == "wheel") graphs.push_back(lir::make_wheel(gn));
            else if (family == "bowtie") graphs.push_back(lir::make_bowtie());
            else if (family == "random-regular") graphs.push_back(lir::random_regular(gn, gd, seed));
            else if (family == "subcubic") graphs = lir::enumerate_connected_subcubic(gn);
            else if (family == "cubic") graphs = lir::enumerate_connected_cubic(gn);
            else if (family == "cubic-subdivided") {
                for (const auto& h : lir::enumerate_connected_cubic(gn))
                    graphs.push_back(lir::subdivide_all(h));
            } else if (family == "split") {
                std::vector<int> d;
                std::stringstream ss(dseq);
                std::string tok;
                while (std::getline(ss, tok, ',')) d.push_back(std::stoi(tok));
                if ((int)d.size() < gn) d.resize(gn, 0);
                graphs.push_back(lir::make_split(gn, d));
            } else {
                throw lir::error("unknown family: " + family);
            }
            for (const auto& g : graphs) std::cout << lir::emit_graph6(g) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
