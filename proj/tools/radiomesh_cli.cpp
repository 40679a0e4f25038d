// radiomesh: build P(m,m) x K_{1,n} graphs, compute radio labelings, evaluate
// the closed-form bounds and adjudicate them against BFS / exhaustive search.

#include "radiomesh/errors.hpp"
#include "radiomesh/formulas.hpp"
#include "radiomesh/harness.hpp"
#include "radiomesh/io.hpp"
#include "radiomesh/labeling.hpp"
#include "radiomesh/product.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

using namespace radiomesh;

namespace {

constexpr int kExitInvalidLabeling = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct Options {
    int m = 0;
    int n = 0;
    std::string indexing = "row-major";
    long budget_ms = 60'000;
    std::string out;
    std::string format = "text";
    std::string graph_path;
    std::string family = "product";
    std::string labeling_path;
    std::string mode = "greedy";
    std::string witness_path;
    std::vector<int> ms{2, 3, 4, 5, 6};
    std::vector<int> ns{1, 2, 3};
    std::size_t exact_limit = 12;
    int m_min = 2;
    int m_max = 6;
    bool with_spans = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Owns the output file when --out names one; otherwise standard output.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw IoError("cannot open " + path + " for writing");
        path_ = path;
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    [[nodiscard]] bool to_file() const { return file_ != nullptr; }
    void finish() {
        if (file_) {
            file_->flush();
            if (!*file_) throw IoError("failed writing " + path_);
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::string path_;
};

CellIndexing indexing_of(const Options& o) {
    auto idx = parse_indexing(o.indexing);
    if (!idx) throw UsageError("unknown indexing '" + o.indexing + "' (row-major, col-major, serpentine)");
    return *idx;
}

bool csv(const Options& o) {
    if (o.format != "text" && o.format != "csv") throw UsageError("--format must be csv or text");
    return o.format == "csv";
}

ProductParams product_params(const Options& o) {
    if (o.m == 0 || o.n == 0) throw UsageError("--m and --n are required");
    return {o.m, o.n};
}

struct Target {
    Graph graph;
    std::string description;
};

Target resolve_graph(const Options& o) {
    if (!o.graph_path.empty()) return {read_graph(o.graph_path).graph, o.graph_path};
    if (o.family == "product") {
        ProductGraph pg(product_params(o), indexing_of(o));
        return {pg.graph(), "P(" + std::to_string(o.m) + "," + std::to_string(o.m) + ") x K_{1," +
                                std::to_string(o.n) + "}"};
    }
    if (o.family == "path") {
        if (o.m == 0) throw UsageError("--family path needs --m");
        return {build_path(static_cast<std::size_t>(o.m)), "P_" + std::to_string(o.m)};
    }
    if (o.family == "star") {
        if (o.n == 0) throw UsageError("--family star needs --n");
        return {build_star(static_cast<std::size_t>(o.n)), "K_{1," + std::to_string(o.n) + "}"};
    }
    if (o.family == "mesh") {
        if (o.m == 0) throw UsageError("--family mesh needs --m");
        return {build_mesh(static_cast<std::size_t>(o.m)), "P(" + std::to_string(o.m) + "," + std::to_string(o.m) + ")"};
    }
    throw UsageError("unknown --family '" + o.family + "' (product, path, star, mesh)");
}

SearchBudget budget_of(const Options& o) {
    if (o.budget_ms <= 0) throw UsageError("--budget-ms must be positive");
    return {std::chrono::milliseconds(o.budget_ms), 0};
}

int cmd_gen(const Options& o) {
    ProductGraph pg(product_params(o), indexing_of(o));
    Output out(o.out);
    write_graph(out.stream(), pg);
    out.finish();
    if (out.to_file()) {
        std::cout << "wrote " << pg.graph().size() << " vertices, " << pg.graph().num_edges() << " edges to " << o.out
                  << '\n';
    }
    return 0;
}

int cmd_diam(const Options& o) {
    const bool as_csv = csv(o);
    auto target = resolve_graph(o);
    const int d = diameter(target.graph);
    Output out(o.out);
    auto& os = out.stream();
    if (!as_csv) {
        os << "diameter of " << target.description << " = " << d;
        if (o.graph_path.empty() && o.family == "product") {
            if (o.n >= 2) {
                os << " (2m = " << diam_formula(product_params(o)) << ")";
            } else {
                os << " (n = 1: 2m - 1, the 2m formula needs n >= 2)";
            }
        }
        os << '\n';
    }
    os << "vertices,diameter\n" << target.graph.size() << ',' << d << '\n';
    out.finish();
    return 0;
}

int cmd_rn_exact(const Options& o) {
    const bool as_csv = csv(o);
    auto target = resolve_graph(o);
    DistanceMatrix dm(target.graph);
    auto result = exact_rn(target.graph, dm, budget_of(o));
    Output out(o.out);
    auto& os = out.stream();
    if (!as_csv) {
        os << "rn(" << target.description << ") " << (result.status == RnStatus::Exact ? "= " : "<= ") << result.value
           << " [" << to_string(result.status) << ", " << result.nodes << " nodes]\n";
    }
    os << "vertices,value,status,nodes\n"
       << target.graph.size() << ',' << result.value << ',' << to_string(result.status) << ',' << result.nodes << '\n';
    out.finish();
    if (!o.witness_path.empty() && result.witness) {
        Output w(o.witness_path);
        write_labeling(w.stream(), result.witness->normalized());
        w.finish();
    }
    return 0;
}

int cmd_bound(const Options& o) {
    const bool as_csv = csv(o);
    const auto p = product_params(o);
    Output out(o.out);
    auto& os = out.stream();
    if (!as_csv) {
        os << "lower bound for P(" << p.m() << "," << p.m() << ") x K_{1," << p.n() << "} (" << (p.even() ? "even" : "odd")
           << " m): " << combined_bound(p) << '\n';
    }
    write_bounds_csv(os, bounds_table(p));
    out.finish();
    return 0;
}

int cmd_label(const Options& o) {
    if (o.mode != "greedy" && o.mode != "consecutive") throw UsageError("--mode must be greedy or consecutive");
    const auto p = product_params(o);
    const auto construction = construct_paper_labeling(p, indexing_of(o));
    const auto& chosen = o.mode == "greedy" ? construction.greedy : construction.consecutive;
    Output out(o.out);
    write_labeling(out.stream(), chosen);
    out.finish();
    std::ostream& summary = out.to_file() ? std::cout : std::cerr;
    summary << "greedy span " << construction.greedy.span() << ", consecutive-only span "
            << construction.consecutive.span() << (construction.consecutive_valid ? " (valid)" : " (invalid)")
            << ", bound " << combined_bound(p) << '\n';
    return 0;
}

int cmd_validate(const Options& o) {
    if (o.labeling_path.empty()) throw UsageError("--labeling is required");
    const bool as_csv = csv(o);
    auto target = resolve_graph(o);
    DistanceMatrix dm(target.graph);
    const auto labeling = read_labeling(o.labeling_path);
    const auto report = validate(target.graph, dm, labeling);
    Output out(o.out);
    auto& os = out.stream();
    if (!as_csv) {
        if (report.valid()) {
            os << "valid radio labeling of " << target.description << ", span " << labeling.span() << '\n';
        } else {
            os << "invalid: " << report.violations.size() << " violating pairs\n";
        }
    }
    os << "u,v,required,actual\n";
    for (const auto& v : report.violations) os << v.u << ',' << v.v << ',' << v.required << ',' << v.actual << '\n';
    out.finish();
    return report.valid() ? 0 : kExitInvalidLabeling;
}

int cmd_verify(const Options& o) {
    const bool as_csv = csv(o);
    VerifyConfig config;
    config.ms = o.ms;
    config.ns = o.ns;
    config.budget = budget_of(o);
    config.exact_limit = o.exact_limit;
    const auto rows = run_verification(config);
    Output out(o.out);
    auto& os = out.stream();
    if (!as_csv) {
        std::size_t match = 0, mismatch = 0, unverifiable = 0;
        for (const auto& r : rows) {
            switch (r.verdict) {
            case Verdict::Match: ++match; break;
            case Verdict::Mismatch: ++mismatch; break;
            case Verdict::Unverifiable: ++unverifiable; break;
            }
        }
        os << rows.size() << " claims: " << match << " Match, " << mismatch << " Mismatch, " << unverifiable
           << " Unverifiable\n";
    }
    write_verdict_csv(os, rows);
    out.finish();
    return 0;
}

int cmd_compare(const Options& o) {
    const bool as_csv = csv(o);
    if (o.n == 0) throw UsageError("--n is required");
    const auto rows = vertex_count_comparison(o.m_min, o.m_max, o.n);
    Output out(o.out);
    auto& os = out.stream();
    if (!as_csv) {
        os << "vertex counts for m in [" << o.m_min << ", " << o.m_max << "], n = " << o.n
           << ": mesh x star has m times the sites of star x path\n";
    }
    write_comparison_csv(os, rows);
    if (o.with_spans) {
        os << '\n';
        write_span_csv(os, span_comparison(o.m_min, o.m_max, o.n));
    }
    out.finish();
    return 0;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--m", o.m, "Mesh order m");
    cmd->add_option("--n", o.n, "Star leaf count n");
    cmd->add_option("--indexing", o.indexing, "Copy layout: row-major, col-major, serpentine")
        ->capture_default_str();
    cmd->add_option("--budget-ms", o.budget_ms, "Search time budget per instance in milliseconds")
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (default standard output)");
    cmd->add_option("--format", o.format, "Output format: text or csv")->capture_default_str();
}

void add_graph_source(CLI::App* cmd, Options& o) {
    cmd->add_option("--graph", o.graph_path, "Read the graph from a file instead of generating it");
    cmd->add_option("--family", o.family, "Generated family: product, path (--m), star (--n), mesh (--m)")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radio labeling toolkit for square mesh x star products"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Write the product graph in text format");
    add_common(gen, o);

    auto* diam = app.add_subcommand("diam", "BFS diameter");
    add_common(diam, o);
    add_graph_source(diam, o);

    auto* rn = app.add_subcommand("rn-exact", "Exact radio number by branch and bound");
    add_common(rn, o);
    add_graph_source(rn, o);
    rn->add_option("--witness", o.witness_path, "Write the optimal labeling here");

    auto* bound = app.add_subcommand("bound", "Evaluate the closed-form bounds");
    add_common(bound, o);

    auto* label = app.add_subcommand("label", "Label the product graph along the constructive ordering");
    add_common(label, o);
    label->add_option("--mode", o.mode, "greedy (always valid) or consecutive (predecessor-only)")
        ->capture_default_str();

    auto* val = app.add_subcommand("validate", "Check a labeling file against the radio condition");
    add_common(val, o);
    add_graph_source(val, o);
    val->add_option("--labeling", o.labeling_path, "Labeling file")->required();

    auto* verify = app.add_subcommand("verify", "Adjudicate every claim over a parameter grid");
    add_common(verify, o);
    verify->add_option("--ms", o.ms, "Mesh orders to check")->delimiter(',')->capture_default_str();
    verify->add_option("--ns", o.ns, "Star leaf counts to check")->delimiter(',')->capture_default_str();
    verify->add_option("--exact-limit", o.exact_limit, "Largest vertex set solved exactly")->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Vertex-count comparison table");
    add_common(compare, o);
    compare->add_option("--m-min", o.m_min, "Smallest m")->capture_default_str();
    compare->add_option("--m-max", o.m_max, "Largest m")->capture_default_str();
    compare->add_flag("--with-spans", o.with_spans, "Also tabulate bound vs constructive spans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*diam) return cmd_diam(o);
        if (*rn) return cmd_rn_exact(o);
        if (*bound) return cmd_bound(o);
        if (*label) return cmd_label(o);
        if (*val) return cmd_validate(o);
        if (*verify) return cmd_verify(o);
        if (*compare) return cmd_compare(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
