#ifndef SPECFAC_REPORT_HPP
#define SPECFAC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specfac/factor.hpp"
#include "specfac/family.hpp"
#include "specfac/graph.hpp"
#include "specfac/verify.hpp"

namespace specfac {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Eigenvalues are rendered at 12 significant digits everywhere, so reports
// diff cleanly across platforms.
double round12(double x);
std::string format12(double x);

struct ScanOptions {
    FamilyParams family;
    double eig_tol = kDefaultEigTol;
    Strategy strategy = Strategy::Pruned;
    std::size_t factor_order_cap = 64;   // pruned search is exponential past dense regimes
    bool parallel = true;
};

struct ScanRecord {
    std::string graph6;
    std::optional<std::string> error;    // parse failure; other fields empty
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t min_degree = 0;
    bool connected = false;
    double rho = 0.0;
    double q = 0.0;
    std::optional<double> hong;          // absent when 2e-n+1 < 0
    std::optional<double> das;           // absent when n < 2
    std::string verdict;                 // has-factor | no-factor | skipped-order-cap
    std::optional<Certificate> certificate;
};

// Per-line records in input order; parse errors are recorded, not thrown.
std::vector<ScanRecord> scan_corpus(const std::vector<std::string>& lines,
                                    const ScanOptions& opt);

ScanRecord scan_one(const std::string& line, const ScanOptions& opt);

json certificate_json(const Certificate& c);
json graph_json(const Graph& g);
json scan_record_json(const ScanRecord& rec);
std::string scan_record_csv(const ScanRecord& rec);
std::string scan_csv_header();

json report_json(const VerificationReport& rep);

} // namespace specfac

#endif
