// specfac: component-factor existence, spectral bounds, extremal graphs,
// and numeric verification of the two spectral sufficient conditions.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "specfac/extremal.hpp"
#include "specfac/factor.hpp"
#include "specfac/graph6.hpp"
#include "specfac/report.hpp"
#include "specfac/spectra.hpp"
#include "specfac/sweep.hpp"
#include "specfac/trees.hpp"
#include "specfac/verify.hpp"

namespace {

using namespace specfac;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OutputSink {
    std::string path;   // empty = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
        }
        return file;
    }
};

json spectra_json_for(const Graph& g, double tol) {
    json sp;
    sp["rho"] = round12(adjacency_spectral_radius(g, tol).value);
    sp["q"] = round12(signless_laplacian_spectral_radius(g, tol).value);
    const HongBound hb = hong_bound(g);
    sp["hong"] = hb.applicable ? json(round12(hb.bound)) : json(nullptr);
    sp["das"] = g.order() >= 2 ? json(round12(das_bound(g))) : json(nullptr);
    return sp;
}

int run_spectra(const std::string& graph6, double tol, const std::string& format,
                OutputSink& out) {
    const Graph g = from_graph6(graph6);
    if (g.order() == 0) throw std::invalid_argument("spectra: empty graph");
    if (format == "text") {
        const auto rho = adjacency_spectral_radius(g, tol);
        const auto q = signless_laplacian_spectral_radius(g, tol);
        out.stream() << "graph " << graph6 << ": n=" << g.order()
                     << " e=" << g.edge_count() << " rho=" << format12(rho.value)
                     << " q=" << format12(q.value) << "\n";
        return kExitOk;
    }
    json j;
    j["tool_version"] = kToolVersion;
    j["mode"] = "spectra";
    j["graph"] = graph_json(g);
    j["spectra"] = spectra_json_for(g, tol);
    out.stream() << j.dump(2) << "\n";
    return kExitOk;
}

int run_check(const std::string& graph6, const FamilyParams& p, Strategy strategy,
              const std::string& format, OutputSink& out) {
    const Graph g = from_graph6(graph6);
    const FactorVerdict fv = has_factor(g, p, strategy);
    if (format == "text") {
        out.stream() << graph6 << " "
                     << (fv.has_factor ? "has-factor" : "no-factor") << "\n";
    } else {
        json j;
        j["tool_version"] = kToolVersion;
        j["mode"] = "check";
        json params;
        params["k"] = p.k;
        params["r"] = p.r;
        j["params"] = params;
        j["graph"] = graph_json(g);
        json f;
        f["verdict"] = fv.has_factor ? "has-factor" : "no-factor";
        if (fv.certificate) f["certificate"] = certificate_json(*fv.certificate);
        j["factor"] = f;
        out.stream() << j.dump(2) << "\n";
    }
    return fv.has_factor ? kExitOk : kExitViolation;
}

int run_extremal(std::int64_t n, std::int64_t delta, std::optional<std::int64_t> s_opt,
                 const FamilyParams& p, double tol, const std::string& format,
                 OutputSink& out) {
    const std::int64_t s = s_opt.value_or(delta);
    ExtremalSpec es;
    es.n = n;
    es.s = s;
    es.family = p;
    const Graph g = build_extremal(es);
    const auto cert = wolf_violation(g, p, Strategy::Pruned);

    if (format == "text") {
        auto& os = out.stream();
        os << "G1(n=" << n << ", s=" << s << ", k=" << p.k << ", r=" << p.r
           << ") = " << to_graph6(g) << "\n"
           << "edges " << g.edge_count() << ", delta " << degree_stats(g).min_degree
           << ", rho " << format12(adjacency_spectral_radius(g, tol).value) << ", q "
           << format12(signless_laplacian_spectral_radius(g, tol).value) << "\n";
        if (cert)
            os << "no-factor certificate: |S|=" << cert->s.count() << " lhs=" << cert->lhs
               << " rhs=" << cert->rhs << "\n";
        return kExitOk;
    }
    json j;
    j["tool_version"] = kToolVersion;
    j["mode"] = "extremal";
    json params;
    params["k"] = p.k;
    params["r"] = p.r;
    params["delta"] = delta;
    params["n"] = n;
    params["s"] = s;
    j["params"] = params;
    j["graph"] = graph_json(g);
    j["spectra"] = spectra_json_for(g, tol);
    json f;
    f["verdict"] = cert ? "no-factor" : "has-factor";
    if (cert) f["certificate"] = certificate_json(*cert);
    j["factor"] = f;
    json th;
    const Rat ta = threshold_A(delta, p);
    const Rat tq = threshold_Q(delta, p);
    th["A"] = {{"rational", ta.str()},
               {"value", round12(ta.to_double())},
               {"min_order", min_order_A(delta, p)}};
    th["Q"] = {{"rational", tq.str()},
               {"value", round12(tq.to_double())},
               {"min_order", min_order_Q(delta, p)}};
    j["thresholds"] = th;
    out.stream() << j.dump(2) << "\n";
    return kExitOk;
}

int run_trees(std::size_t n, const FamilyParams& p, const std::string& format,
              OutputSink& out) {
    const std::vector<Graph> trees = enumerate_trees(n);
    if (format == "json") {
        json j;
        j["tool_version"] = kToolVersion;
        j["mode"] = "trees";
        json params;
        params["k"] = p.k;
        params["r"] = p.r;
        params["n"] = n;
        j["params"] = params;
        json arr = json::array();
        for (const auto& t : trees) {
            const TreeClassification tc = in_tree_family(t, p);
            json tj;
            tj["graph6"] = to_graph6(t);
            tj["member"] = tc.member;
            if (tc.violation_a) tj["violation_a"] = tc.violation_a->indices();
            if (tc.nonwitnessed_edge)
                tj["nonwitnessed_edge"] = {tc.nonwitnessed_edge->first,
                                           tc.nonwitnessed_edge->second};
            arr.push_back(tj);
        }
        j["trees"] = arr;
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        for (const auto& t : trees) {
            const TreeClassification tc = in_tree_family(t, p);
            os << to_graph6(t) << " " << (tc.member ? "member" : "non-member") << "\n";
        }
    }
    return kExitOk;
}

void print_report_text(const VerificationReport& rep, std::ostream& os) {
    os << rep.mode << " n=" << rep.n << " delta=" << rep.delta << " k=" << rep.k
       << " r=" << rep.r << " s=" << rep.s << " -> " << rep.outcome << "\n";
    for (const auto& st : rep.steps) {
        os << "  [" << (st.holds ? "ok" : (st.informational ? "info-fail" : "FAIL"))
           << (st.boundary ? ", boundary" : "") << "] " << st.description << ": "
           << format12(st.lhs) << " " << st.relation << " " << format12(st.rhs) << "\n";
    }
    if (rep.counterexample_graph6)
        os << "  counterexample: " << *rep.counterexample_graph6 << "\n";
}

int emit_reports(const std::string& mode, const std::vector<VerificationReport>& reports,
                 const std::string& format, OutputSink& out) {
    bool all_ok = true;
    for (const auto& rep : reports)
        if (rep.outcome == "fail") all_ok = false;
    if (format == "text") {
        for (const auto& rep : reports) print_report_text(rep, out.stream());
        out.stream() << (all_ok ? "all-pass" : "FAIL") << "\n";
    } else {
        json j;
        j["tool_version"] = kToolVersion;
        j["mode"] = mode;
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(report_json(rep));
        j["reports"] = arr;
        j["overall"] = all_ok;
        out.stream() << j.dump(2) << "\n";
    }
    return all_ok ? kExitOk : kExitViolation;
}

int run_scan(const std::string& input, const ScanOptions& opt, const std::string& format,
             OutputSink& out) {
    const std::vector<CorpusLine> lines = read_graph6_lines(input);
    std::vector<std::string> texts;
    texts.reserve(lines.size());
    for (const auto& l : lines) texts.push_back(l.text);
    const std::vector<ScanRecord> records = scan_corpus(texts, opt);
    std::size_t parsed = 0, violations = 0;
    auto& os = out.stream();
    if (format == "csv") os << scan_csv_header() << "\n";
    for (const auto& rec : records) {
        if (!rec.error) ++parsed;
        if (rec.verdict == "no-factor") ++violations;
        if (format == "csv") {
            os << scan_record_csv(rec) << "\n";
        } else if (format == "text") {
            if (rec.error)
                os << rec.graph6 << " error: " << *rec.error << "\n";
            else
                os << rec.graph6 << " n=" << rec.n << " e=" << rec.edges
                   << " delta=" << rec.min_degree
                   << (rec.connected ? " connected" : " disconnected")
                   << " rho=" << format12(rec.rho) << " q=" << format12(rec.q) << " "
                   << rec.verdict << "\n";
        } else {
            os << scan_record_json(rec).dump() << "\n";
        }
    }
    if (parsed == 0) {
        std::cerr << "scan: no graph6 line parsed\n";
        return kExitUsage;
    }
    return violations == 0 ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"component-factor spectral verification toolkit"};
    app.require_subcommand(1);

    std::string graph6_arg, input_path, out_path, format = "json", mode = "instance";
    std::int64_t k = 2, r = 1, delta = 1, n_arg = 0, s_arg = -1;
    double tol = kDefaultEigTol, gap_tol = kDefaultGapTol;
    std::uint64_t seed = 0;
    std::size_t samples = 500, max_order = 64;
    bool naive = false;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "family parameter k");
        cmd->add_option("--r", r, "family parameter r (r < k)");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the report to a file");
        cmd->add_option("--format", format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--tol", tol, "eigenvalue residual tolerance");
        cmd->add_option("--gap-tol", gap_tol, "comparison gap tolerance");
    };

    auto* c_spectra = app.add_subcommand("spectra", "spectral radii and classical bounds");
    c_spectra->add_option("--graph6", graph6_arg, "graph6 line")->required();
    add_common(c_spectra);

    auto* c_check = app.add_subcommand("check", "factor existence via the Wolf criterion");
    c_check->add_option("--graph6", graph6_arg, "graph6 line")->required();
    add_family(c_check);
    add_common(c_check);
    c_check->add_flag("--naive", naive, "use the 2^n subset loop instead of the pruned search");

    auto* c_extremal = app.add_subcommand("extremal", "build and report the extremal graph G1");
    c_extremal->add_option("--n", n_arg, "order")->required();
    c_extremal->add_option("--delta", delta, "minimum degree delta")->required();
    c_extremal->add_option("--s", s_arg, "separator size (default: delta)");
    add_family(c_extremal);
    add_common(c_extremal);

    auto* c_trees = app.add_subcommand("trees", "enumerate trees with family membership");
    c_trees->add_option("--n", n_arg, "tree order (1..12)")->required();
    add_family(c_trees);
    add_common(c_trees);

    auto* c_verify = app.add_subcommand("verify", "replay the proof chains and theorems");
    c_verify->add_option("--mode", mode, "instance | separation | chain | random-scan")
        ->check(CLI::IsMember({"instance", "separation", "chain", "random-scan"}));
    c_verify->add_option("--graph6", graph6_arg, "graph6 line (instance mode)");
    c_verify->add_option("--n", n_arg, "order");
    c_verify->add_option("--delta", delta, "minimum degree delta");
    c_verify->add_option("--s", s_arg, "separator size (chain mode; default: sweep)");
    c_verify->add_option("--seed", seed, "RNG seed (required for random-scan)");
    c_verify->add_option("--samples", samples, "random-scan sample count");
    add_family(c_verify);
    add_common(c_verify);

    auto* c_scan = app.add_subcommand("scan", "scan a newline-delimited graph6 corpus");
    c_scan->add_option("--input", input_path, "corpus file")->required();
    c_scan->add_flag("--naive", naive, "use the naive subset loop");
    c_scan->add_option("--max-order", max_order, "factor-check order cap");
    add_family(c_scan);
    add_common(c_scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    OutputSink out{out_path, {}};
    try {
        const FamilyParams family(k, r);
        if (c_spectra->parsed()) return run_spectra(graph6_arg, tol, format, out);
        if (c_check->parsed())
            return run_check(graph6_arg, family,
                             naive ? Strategy::Naive : Strategy::Pruned, format, out);
        if (c_extremal->parsed())
            return run_extremal(n_arg, delta,
                                s_arg >= 0 ? std::optional<std::int64_t>(s_arg)
                                           : std::nullopt,
                                family, tol, format, out);
        if (c_trees->parsed())
            return run_trees(static_cast<std::size_t>(n_arg), family, format, out);
        if (c_scan->parsed()) {
            ScanOptions opt;
            opt.family = family;
            opt.eig_tol = tol;
            opt.strategy = naive ? Strategy::Naive : Strategy::Pruned;
            opt.factor_order_cap = max_order;
            return run_scan(input_path, opt, format, out);
        }
        if (c_verify->parsed()) {
            std::vector<VerificationReport> reports;
            if (mode == "instance") {
                if (graph6_arg.empty())
                    throw CLI::ValidationError("verify --mode instance needs --graph6");
                const Graph g = from_graph6(graph6_arg);
                reports.push_back(verify_theorem_instance(g, delta, family,
                                                          MatrixChoice::Adjacency, tol));
                reports.push_back(verify_theorem_instance(
                    g, delta, family, MatrixChoice::SignlessLaplacian, tol));
            } else if (mode == "separation") {
                reports.push_back(separation_scan(n_arg, delta, family, tol, gap_tol));
            } else if (mode == "chain") {
                const std::int64_t smax = (r * n_arg - 1) / (k + r);
                const std::int64_t s_lo = s_arg >= 0 ? s_arg : delta + 1;
                const std::int64_t s_hi = s_arg >= 0 ? s_arg : smax;
                for (std::int64_t s = s_lo; s <= s_hi; ++s) {
                    reports.push_back(chain_check_adjacency(n_arg, delta, family, s, tol,
                                                            gap_tol));
                    if (n_arg >= min_order_Q(delta, family))
                        reports.push_back(chain_check_q(n_arg, delta, family, s, tol,
                                                        gap_tol));
                }
            } else {   // random-scan
                if (!c_verify->count("--seed"))
                    throw CLI::ValidationError("verify --mode random-scan needs --seed");
                const std::int64_t n_use =
                    n_arg > 0 ? n_arg
                              : std::max(min_order_A(delta, family),
                                         min_order_Q(delta, family));
                // fan out across seeds; results merge in input order
                auto batches = sweep_map<std::vector<VerificationReport>>(
                    samples, [&](std::size_t i) {
                        const Graph g = random_connected_graph(
                            static_cast<std::size_t>(n_use),
                            static_cast<std::size_t>(delta), seed + i);
                        std::vector<VerificationReport> out;
                        for (auto which : {MatrixChoice::Adjacency,
                                           MatrixChoice::SignlessLaplacian}) {
                            VerificationReport rep =
                                verify_theorem_instance(g, delta, family, which, tol);
                            if (rep.outcome != "not-applicable")
                                out.push_back(std::move(rep));
                        }
                        return out;
                    });
                for (auto& batch : batches)
                    for (auto& rep : batch) reports.push_back(std::move(rep));
            }
            return emit_reports("verify-" + mode, reports, format, out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Graph6Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
