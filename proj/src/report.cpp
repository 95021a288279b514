#include "specfac/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "specfac/graph6.hpp"
#include "specfac/spectra.hpp"
#include "specfac/sweep.hpp"

namespace specfac {

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

ScanRecord scan_one(const std::string& line, const ScanOptions& opt) {
    ScanRecord rec;
    rec.graph6 = line;
    Graph g;
    try {
        g = from_graph6(line);
    } catch (const std::exception& e) {
        rec.error = e.what();
        return rec;
    }
    rec.n = g.order();
    rec.edges = g.edge_count();
    if (g.order() == 0) {
        rec.error = "empty graph: no invariants to report";
        return rec;
    }
    const DegreeStats ds = degree_stats(g);
    rec.min_degree = ds.min_degree;
    rec.connected = ds.connected;
    rec.rho = round12(adjacency_spectral_radius(g, opt.eig_tol).value);
    rec.q = round12(signless_laplacian_spectral_radius(g, opt.eig_tol).value);
    const HongBound hb = hong_bound(g);
    if (hb.applicable) rec.hong = round12(hb.bound);
    if (g.order() >= 2) rec.das = round12(das_bound(g));
    if (g.order() > opt.factor_order_cap) {
        rec.verdict = "skipped-order-cap";
        return rec;
    }
    FactorVerdict fv = has_factor(g, opt.family, opt.strategy);
    rec.verdict = fv.has_factor ? "has-factor" : "no-factor";
    rec.certificate = std::move(fv.certificate);
    return rec;
}

std::vector<ScanRecord> scan_corpus(const std::vector<std::string>& lines,
                                    const ScanOptions& opt) {
    auto run = [&](std::size_t i) { return scan_one(lines[i], opt); };
    if (opt.parallel) return sweep_map<ScanRecord>(lines.size(), run);
    return sweep_map_serial<ScanRecord>(lines.size(), run);
}

json certificate_json(const Certificate& c) {
    json j;
    j["S"] = c.s.indices();
    j["isolated"] = c.isolated.indices();
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    return j;
}

json graph_json(const Graph& g) {
    json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    if (g.order() > 0) {
        const DegreeStats ds = degree_stats(g);
        j["min_degree"] = ds.min_degree;
        j["connected"] = ds.connected;
    } else {
        j["min_degree"] = nullptr;
        j["connected"] = nullptr;
    }
    return j;
}

json scan_record_json(const ScanRecord& rec) {
    json j;
    j["graph6"] = rec.graph6;
    if (rec.error) {
        j["error"] = *rec.error;
        return j;
    }
    j["n"] = rec.n;
    j["edges"] = rec.edges;
    j["min_degree"] = rec.min_degree;
    j["connected"] = rec.connected;
    json sp;
    sp["rho"] = rec.rho;
    sp["q"] = rec.q;
    sp["hong"] = rec.hong ? json(*rec.hong) : json(nullptr);
    sp["das"] = rec.das ? json(*rec.das) : json(nullptr);
    j["spectra"] = sp;
    json f;
    f["verdict"] = rec.verdict;
    if (rec.certificate) f["certificate"] = certificate_json(*rec.certificate);
    j["factor"] = f;
    return j;
}

std::string scan_csv_header() {
    return "graph6,n,edges,min_degree,connected,rho,q,hong,das,verdict,"
           "cert_S,cert_isolated,cert_lhs,cert_rhs,error";
}

namespace {
std::string join_indices(const std::vector<int>& idx) {
    std::ostringstream os;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ';';
        os << idx[i];
    }
    return os.str();
}
} // namespace

std::string scan_record_csv(const ScanRecord& rec) {
    std::ostringstream os;
    os << rec.graph6 << ',';
    if (rec.error) {
        os << ",,,,,,,,,,,,," << '"' << *rec.error << '"';
        return os.str();
    }
    os << rec.n << ',' << rec.edges << ',' << rec.min_degree << ','
       << (rec.connected ? "true" : "false") << ',' << format12(rec.rho) << ','
       << format12(rec.q) << ',' << (rec.hong ? format12(*rec.hong) : "") << ','
       << (rec.das ? format12(*rec.das) : "") << ',' << rec.verdict << ',';
    if (rec.certificate) {
        os << join_indices(rec.certificate->s.indices()) << ','
           << join_indices(rec.certificate->isolated.indices()) << ','
           << rec.certificate->lhs << ',' << rec.certificate->rhs << ',';
    } else {
        os << ",,,,";
    }
    return os.str();
}

json report_json(const VerificationReport& rep) {
    json j;
    j["tool_version"] = kToolVersion;
    j["mode"] = rep.mode;
    json params;
    params["k"] = rep.k;
    params["r"] = rep.r;
    params["delta"] = rep.delta;
    params["n"] = rep.n;
    params["s"] = rep.s;
    j["params"] = params;
    json steps = json::array();
    for (const auto& st : rep.steps) {
        json sj;
        sj["description"] = st.description;
        sj["lhs"] = round12(st.lhs);
        sj["relation"] = st.relation;
        sj["rhs"] = round12(st.rhs);
        sj["holds"] = st.holds;
        sj["boundary"] = st.boundary;
        sj["informational"] = st.informational;
        steps.push_back(sj);
    }
    j["steps"] = steps;
    j["overall"] = rep.overall;
    j["outcome"] = rep.outcome;
    if (rep.counterexample_graph6) {
        json ce;
        ce["graph6"] = *rep.counterexample_graph6;
        if (rep.counterexample_certificate)
            ce["certificate"] = certificate_json(*rep.counterexample_certificate);
        j["counterexample"] = ce;
    }
    return j;
}

} // namespace specfac
