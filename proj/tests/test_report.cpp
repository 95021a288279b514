#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specfac/graph6.hpp"
#include "specfac/report.hpp"
#include "specfac/sweep.hpp"
#include "specfac/verify.hpp"

using namespace specfac;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SPECFAC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    const int status = pclose(pipe);
    return CommandResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& contents) {
    const std::string path = std::string("/tmp/specfac_test_") + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("scan records") {
    ScanOptions opt;
    opt.family = FamilyParams(2, 1);
    const auto records = scan_corpus({"Bw"}, opt);
    REQUIRE(records.size() == 1);
    CHECK(!records[0].error);
    CHECK(records[0].n == 3);
    CHECK(records[0].edges == 3);
    CHECK(records[0].verdict == "has-factor");

    SUBCASE("malformed lines are recorded, processing continues") {
        const auto mixed = scan_corpus({"Bw", "not graph6 at all", "Bg"}, opt);
        REQUIRE(mixed.size() == 3);
        CHECK(!mixed[0].error);
        CHECK(mixed[1].error);
        CHECK(!mixed[2].error);
    }
    SUBCASE("parallel and serial sweeps agree") {
        std::vector<std::string> lines;
        for (std::size_t n = 1; n <= 9; ++n)
            lines.push_back(to_graph6(make_family(FamilyKind::Star, n + 1)));
        ScanOptions par = opt;
        par.parallel = true;
        ScanOptions ser = opt;
        ser.parallel = false;
        const auto a = scan_corpus(lines, par);
        const auto b = scan_corpus(lines, ser);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(scan_record_json(a[i]).dump() == scan_record_json(b[i]).dump());
            CHECK(scan_record_csv(a[i]) == scan_record_csv(b[i]));
        }
    }
}

TEST_CASE("json reports round-trip byte-identically") {
    const auto rep = separation_scan(15, 1, FamilyParams(2, 1));
    const std::string once = report_json(rep).dump(2);
    const std::string twice = json::parse(once).dump(2);
    CHECK(once == twice);

    ScanOptions opt;
    opt.family = FamilyParams(2, 1);
    for (const auto& rec : scan_corpus({"Bw", "Bg", "@"}, opt)) {
        const std::string a = scan_record_json(rec).dump();
        CHECK(json::parse(a).dump() == a);
    }
}

TEST_CASE("csv and json carry identical values") {
    ScanOptions opt;
    opt.family = FamilyParams(2, 1);
    const auto rec = scan_one(to_graph6(make_family(FamilyKind::Star, 4)), opt);
    const json j = scan_record_json(rec);
    std::stringstream csv(scan_record_csv(rec));
    std::vector<std::string> fields;
    std::string field;
    while (std::getline(csv, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() >= 10);
    CHECK(fields[0] == j["graph6"]);
    CHECK(std::stoul(fields[1]) == j["n"].get<std::size_t>());
    CHECK(std::stod(fields[5]) == doctest::Approx(j["spectra"]["rho"].get<double>())
                                      .epsilon(1e-12));
    CHECK(std::stod(fields[6]) == doctest::Approx(j["spectra"]["q"].get<double>())
                                      .epsilon(1e-12));
    CHECK(fields[9] == j["factor"]["verdict"]);
}

TEST_CASE("round12 pins eigenvalue rendering") {
    CHECK(format12(2.0) == "2");
    CHECK(format12(round12(3.14159265358979323846)) == "3.14159265359");
    CHECK(round12(round12(1.0 / 3.0)) == round12(1.0 / 3.0));
}

TEST_CASE("corpus reader skips comments and blank lines, handles CRLF") {
    const std::string path = write_temp(
        "reader.g6", "# header comment\n\nBw\r\n  \nBg\n# trailing\n");
    const auto lines = read_graph6_lines(path);
    // the two-space line is not blank; it must surface as a (failing) record
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].text == "Bw");
    CHECK(lines[0].line_no == 3);
    CHECK(lines[1].text == "  ");
    CHECK(lines[2].text == "Bg");
    CHECK_THROWS_AS(read_graph6_lines("/nonexistent/specfac.g6"), std::runtime_error);
}

TEST_CASE("cli: --out writes the report to a file") {
    const std::string out = "/tmp/specfac_test_out.json";
    std::remove(out.c_str());
    const auto r = run_cli("check --graph6 Bw --k 2 --r 1 --out " + out);
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    json j;
    in >> j;
    CHECK(j["factor"]["verdict"] == "has-factor");
}

TEST_CASE("cli: check") {
    const auto has = run_cli("check --graph6 Bw --k 2 --r 1");
    CHECK(has.exit_code == 0);
    CHECK(has.output.find("has-factor") != std::string::npos);

    // K_{1,3} is Cs in graph6
    const auto no = run_cli("check --graph6 Cs --k 2 --r 1");
    CHECK(no.exit_code == 1);
    CHECK(no.output.find("no-factor") != std::string::npos);

    const auto naive = run_cli("check --graph6 Cs --k 2 --r 1 --naive");
    CHECK(naive.exit_code == 1);

    const auto bad = run_cli("check --graph6 '#####' --k 2 --r 1");
    CHECK(bad.exit_code == 2);
    const auto badfam = run_cli("check --graph6 Bw --k 1 --r 2");
    CHECK(badfam.exit_code == 2);
}

TEST_CASE("cli: spectra and extremal") {
    const auto sp = run_cli("spectra --graph6 Dl{");   // some n=5 graph? validated below
    // fall back to a guaranteed-valid line if the above failed to parse
    const auto k5 = run_cli("spectra --graph6 " + to_graph6(make_family(FamilyKind::Complete, 5)));
    CHECK(k5.exit_code == 0);
    CHECK(k5.output.find("\"rho\": 4") != std::string::npos);
    CHECK(k5.output.find("\"q\": 8") != std::string::npos);
    (void)sp;

    const auto ex = run_cli("extremal --n 15 --delta 1 --k 2 --r 1");
    CHECK(ex.exit_code == 0);
    const json j = json::parse(ex.output);
    CHECK(j["graph"]["edges"] == 69);
    CHECK(j["factor"]["verdict"] == "no-factor");
    CHECK(j["factor"]["certificate"]["S"].size() == 1);
    CHECK(j["thresholds"]["A"]["min_order"] == 15);
}

TEST_CASE("cli: trees") {
    const auto tr = run_cli("trees --n 4 --k 2 --r 1 --format text");
    CHECK(tr.exit_code == 0);
    std::istringstream lines(tr.output);
    std::string line;
    std::size_t count = 0, members = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++count;
        if (line.find(" member") != std::string::npos &&
            line.find("non-member") == std::string::npos)
            ++members;
    }
    CHECK(count == 2);
    CHECK(members == 0);   // neither P_4 nor K_{1,3} lies in T_2
}

TEST_CASE("cli: scan exit codes and formats") {
    const std::string corpus = write_temp("corpus.g6", "# comment line\nBw\nBg\n");
    const auto ndjson = run_cli("scan --input " + corpus + " --k 2 --r 1");
    CHECK(ndjson.exit_code == 0);

    const std::string with_bad =
        write_temp("corpus_bad.g6", "Bw\n*&^%$\nBg\n");
    const auto mixed = run_cli("scan --input " + with_bad + " --k 2 --r 1");
    CHECK(mixed.exit_code == 0);
    CHECK(mixed.output.find("error") != std::string::npos);

    const std::string empty = write_temp("corpus_empty.g6", "# nothing here\n");
    const auto none = run_cli("scan --input " + empty + " --k 2 --r 1");
    CHECK(none.exit_code == 2);

    // a corpus containing a no-factor graph exits 1
    const std::string viol = write_temp("corpus_viol.g6", "Bw\nCs\n");
    const auto v = run_cli("scan --input " + viol + " --k 2 --r 1");
    CHECK(v.exit_code == 1);

    const auto csv = run_cli("scan --input " + corpus + " --k 2 --r 1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find(scan_csv_header()) != std::string::npos);

    // graphs above the order cap get a skip verdict instead of a factor check
    const auto capped = run_cli("scan --input " + corpus + " --k 2 --r 1 --max-order 2");
    CHECK(capped.exit_code == 0);
    CHECK(capped.output.find("skipped-order-cap") != std::string::npos);
}

TEST_CASE("cli: verify modes") {
    const auto sep = run_cli("verify --mode separation --n 15 --delta 1 --k 2 --r 1");
    CHECK(sep.exit_code == 0);

    const auto chain = run_cli("verify --mode chain --n 16 --delta 1 --k 3 --r 2 --s 2");
    CHECK(chain.exit_code == 0);
    const json cj = json::parse(chain.output);
    CHECK(cj["overall"] == true);

    const auto inst = run_cli("verify --mode instance --graph6 " +
                              to_graph6(make_family(FamilyKind::Complete, 16)) +
                              " --delta 15 --k 2 --r 1");
    CHECK(inst.exit_code == 0);

    const auto noseed = run_cli("verify --mode random-scan --delta 1 --k 2 --r 1");
    CHECK(noseed.exit_code == 2);

    // usage errors exit 2 across the board
    CHECK(run_cli("check --k 2 --r 1").exit_code == 2);           // missing --graph6
    CHECK(run_cli("verify --mode bogus --n 15 --delta 1").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                            // no subcommand
    CHECK(run_cli("--help").exit_code == 0);

    const auto rs = run_cli(
        "verify --mode random-scan --delta 1 --k 2 --r 1 --seed 5 --samples 8 --format text");
    CHECK(rs.exit_code == 0);
}
