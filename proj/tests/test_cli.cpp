#include <doctest.h>

#include "schema_check.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using bmcover::Json;
using schemacheck::errors_against;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& arg_string) {
    const std::string cmd = std::string(BMCOVER_CLI_PATH) + " " + arg_string + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json parse_report(const RunResult& r) {
    Json j = Json::parse(r.out);
    const auto errors = errors_against("run_report.schema.json", j);
    for (const auto& e : errors) MESSAGE(e);
    CHECK(errors.empty());
    CHECK(j["exit"] == r.exit_code);
    return j;
}

void check_payload(const std::string& schema, const Json& report) {
    const auto errors = errors_against(schema, report["result"]);
    for (const auto& e : errors) MESSAGE(e);
    CHECK(errors.empty());
}

} // namespace

TEST_CASE("braid family emits the printed word") {
    const RunResult r = run_cli("braid family --m 4 --k 0");
    CHECK(r.exit_code == 0);
    const Json j = parse_report(r);
    check_payload("braid_word.schema.json", j);
    CHECK(j["result"]["text"] == "-2.-2.1.-2.3.2.2.2.-1.2.-3");
}

TEST_CASE("braid parse round trip and info") {
    const RunResult r = run_cli("braid parse --word 'Gamma(2)^-1' --strands 4");
    CHECK(r.exit_code == 0);
    const Json j = parse_report(r);
    CHECK(j["result"]["text"] == "-2.-1.-1.-2");

    const RunResult info = run_cli("braid info --m 4 --k 0");
    const Json ji = parse_report(info);
    check_payload("braid_info.schema.json", ji);
    CHECK(ji["result"]["components"] == 1);
    CHECK(ji["result"]["exponent_sum"] == 1);
    CHECK(ji["result"]["permutation"]["images"] == Json::array({3, 4, 2, 1}));
}

TEST_CASE("braid artin emits images and the presentation") {
    const RunResult r = run_cli("braid artin --word 1 --strands 2");
    CHECK(r.exit_code == 0);
    const Json j = parse_report(r);
    check_payload("artin.schema.json", j);
    CHECK(j["result"]["images"][0]["image"] == Json::array({"mu1", "mu2", "mu1^-1"}));
    const auto perrors =
        errors_against("presentation.schema.json", j["result"]["presentation"]);
    CHECK(perrors.empty());
    CHECK(j["result"]["presentation"]["relators"].size() == 5);
}

TEST_CASE("cover monodromy prints the printed matrix") {
    const RunResult r = run_cli("cover monodromy --m 2 --k 0");
    CHECK(r.exit_code == 0);
    const Json j = parse_report(r);
    check_payload("int_matrix.schema.json", j);
    CHECK(j["result"]["rows"] ==
          Json::array({Json::array({"-10", "-17", "11"}), Json::array({"46", "73", "-46"}),
                       Json::array({"7", "10", "-6"})}));
}

TEST_CASE("cover alexander matches the alexander invariants surface") {
    const RunResult a = run_cli("cover alexander --m 2 --k 0");
    const RunResult b = run_cli("alexander invariants --m 2 --k 0");
    CHECK(a.exit_code == 0);
    const Json ja = parse_report(a);
    const Json jb = parse_report(b);
    check_payload("covering_invariants.schema.json", ja);
    CHECK(ja["result"] == jb["result"]);
    CHECK(ja["result"]["reduced_alexander"]["terms"][1]["coeff"] == "-56");
    CHECK(ja["result"]["linking_eval"] == "-54");
}

TEST_CASE("alexander subcommands") {
    const Json dd = parse_report(run_cli("alexander theorem-dd --m 3 --k 1"));
    check_payload("laurent_poly.schema.json", dd);
    CHECK(dd["result"]["terms"].size() == 5);

    const Json lk = parse_report(run_cli("alexander linking --m 2 --k 1"));
    check_payload("linking.schema.json", lk);
    CHECK(lk["result"]["linking_formula"] == "20");
    CHECK(lk["result"]["predicted_alexander_eval"] == "-20");

    const Json un = parse_report(run_cli("alexander unknot-check --m 4 --k 1"));
    check_payload("unknot_evidence.schema.json", un);
    CHECK(un["result"]["verdict"] == "consistent_with_unknot");

    const Json tre = parse_report(run_cli("alexander unknot-check --word 1.1.1 --strands 2"));
    CHECK(tre["result"]["verdict"] == "not_unknot");
}

TEST_CASE("sw subcommands") {
    const Json e1 = parse_report(run_cli("sw e1 --m 2 --k 0"));
    check_payload("sw_e1.schema.json", e1);
    CHECK(e1["result"]["total"] == "-54");

    const Json dis = parse_report(run_cli("sw distinguish --m 2 --i 0 --j 1"));
    check_payload("distinguish.schema.json", dis);
    CHECK(dis["result"]["verdict"] == "distinct");

    const Json same = parse_report(run_cli("sw distinguish --m 2 --i 2 --j 2"));
    CHECK(same["result"]["verdict"] == "not_distinct");

    const Json hyp = parse_report(run_cli("sw distinguish --m 2 --i 0 --j 1 --sw-zero"));
    CHECK(hyp["result"]["verdict"] == "inconclusive");

    const Json fd = parse_report(run_cli("sw fiber-data --n 6"));
    check_payload("fiber_data.schema.json", fd);
    CHECK(fd["result"]["fiber_genus"] == 2);
    CHECK(fd["result"]["h1_rank"] == 5);
}

TEST_CASE("cover closed-form emits matrices for every family") {
    const Json g = parse_report(run_cli("cover closed-form --family gamma --n 4 --k 2"));
    check_payload("int_matrix.schema.json", g);
    CHECK(g["result"]["rows"][0] == Json::array({"1", "4", "0"}));

    const Json p = parse_report(run_cli("cover closed-form --family phi --m 4 --k 1"));
    check_payload("int_matrix.schema.json", p);
    CHECK(p["result"]["rank"] == 7);

    const Json s = parse_report(run_cli("cover closed-form --family psi --m 3"));
    CHECK(s["result"]["rows"][0] == Json::array({"2", "0", "0", "1", "-1"}));

    const Json o = parse_report(run_cli("cover closed-form --family omega --m 3 --k 0"));
    CHECK(o["result"]["rows"][4] == Json::array({"7", "-4", "0", "14", "-16"}));

    CHECK(run_cli("cover closed-form --family omega --m 2 --k 0").exit_code == 3);
    CHECK(run_cli("cover closed-form --family nosuch --m 3").exit_code == 3);
}

TEST_CASE("cover compare reports the adjudicated differences") {
    const RunResult r = run_cli("cover compare --family omega --m-min 2 --m-max 3 --k-max 1");
    CHECK(r.exit_code == 0); // discrepancies are data, not errors
    const Json j = parse_report(r);
    check_payload("discrepancy_report.schema.json", j);
    CHECK(j["result"]["mismatches"] == 2);
    CHECK(j["result"]["rejected"] == 2);

    const RunResult g = run_cli("cover compare --family gamma --n-max 6 --k-min=-2 --k-max 2");
    const Json jg = parse_report(g);
    CHECK(jg["result"]["mismatches"] == 0);
}

TEST_CASE("verify subcommands and exit codes") {
    const RunResult all = run_cli("verify all --m-max 3 --k-max 2");
    CHECK(all.exit_code == 0);
    const Json j = parse_report(all);
    check_payload("verify_report.schema.json", j);
    CHECK(j["result"]["required_failures"] == false);
    CHECK(j["result"]["expected_mismatches"] == 2); // the two adjudicated misprints

    const RunResult gamma = run_cli("verify gamma --m-max 3 --k-max 2");
    CHECK(gamma.exit_code == 0);

    const RunResult psi = run_cli("verify psi --m-max 4");
    const Json jpsi = parse_report(psi);
    CHECK(jpsi["result"]["expected_mismatches"] == 0);
}

TEST_CASE("error envelopes still validate against the report schema") {
    const RunResult r = run_cli("braid family --m 3");
    CHECK(r.exit_code == 3);
    const Json j = parse_report(r);
    CHECK(j["result"]["error"] == "BadIndex");
}

TEST_CASE("usage and domain errors use distinct exit codes") {
    CHECK(run_cli("braid parse --word xyz --strands 4").exit_code == 2);
    CHECK(run_cli("braid parse --word 'Gamma(2,3)' --strands 4").exit_code == 2);
    CHECK(run_cli("braid parse --word 9 --strands 4").exit_code == 3);
    CHECK(run_cli("braid family --m 3 --k 0").exit_code == 3);
    CHECK(run_cli("sw fiber-data --n 5").exit_code == 3);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("braid").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    const RunResult a = run_cli("alexander invariants --m 3 --k 2");
    const RunResult b = run_cli("alexander invariants --m 3 --k 2");
    CHECK(a.out == b.out);

    const RunResult v1 = run_cli("verify omega --m-max 3 --k-max 1 --jobs 1");
    const RunResult v2 = run_cli("verify omega --m-max 3 --k-max 1 --jobs 4");
    // sweep width must not leak into the report
    Json j1 = Json::parse(v1.out);
    Json j2 = Json::parse(v2.out);
    j1["args"] = Json::array();
    j2["args"] = Json::array();
    CHECK(j1 == j2);
}

TEST_CASE("--out writes the same json bytes") {
    const std::string path = "/tmp/bmcover_cli_out_test.json";
    const RunResult r = run_cli("braid family --m 5 --k 1 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string file_bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(file_bytes == r.out);
    std::remove(path.c_str());
}
