#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "padlat/json_io.hpp"

using namespace padlat;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PADLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "padlat_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_doc(const std::string& name, const Json& j) {
    fs::path p = work_dir() / name;
    std::ofstream(p) << j.dump(2) << "\n";
    return p.string();
}

const PadicContext two(2);

Json lattice_doc(std::initializer_list<std::initializer_list<const char*>> gens) {
    Json j;
    j["p"] = 2;
    j["n"] = static_cast<int>(gens.begin()->size());
    Json arr = Json::array();
    for (auto& g : gens) {
        Json row = Json::array();
        for (const char* s : g)
            row.push_back(s);
        arr.push_back(row);
    }
    j["generators"] = arr;
    return j;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("canon emits the canonical envelope, deterministically") {
    std::string in = write_doc("canon_in.json", lattice_doc({{"1", "1"}, {"0", "2"}}));
    CliResult r1 = run_cli("canon " + in);
    CHECK(r1.exit_code == 0);
    Json j = parse_document(r1.out, "out");
    Lattice expected = Lattice::from_generators(
        two, 2, {{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(2)}});
    CHECK(j == lattice_to_json(expected));

    CliResult r2 = run_cli("canon --json " + in);
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == r1.out);
}

TEST_CASE("dist golden") {
    std::string r = write_doc("dist_r.json", lattice_doc({{"1", "0"}, {"0", "1"}}));
    std::string s = write_doc("dist_s.json", lattice_doc({{"1", "0"}, {"1", "2"}}));
    CliResult res = run_cli("dist " + r + " " + s);
    CHECK(res.exit_code == 0);
    CHECK(parse_document(res.out, "out") == Json{{"k", {0, -1}}});
}

TEST_CASE("sum, meet, dual") {
    std::string a = write_doc("a.json", lattice_doc({{"1/2", "1/2"}, {"0", "1"}}));
    std::string o2 = write_doc("o2.json", lattice_doc({{"1", "0"}, {"0", "1"}}));

    CliResult s = run_cli("sum " + o2 + " " + a);
    CHECK(parse_document(s.out, "out")["generators"] ==
          parse_document(run_cli("canon " + a).out, "out")["generators"]);

    CliResult m = run_cli("meet " + o2 + " " + a);
    CHECK(parse_document(m.out, "out")["generators"] ==
          Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}));

    std::string l = write_doc("l.json", lattice_doc({{"1", "1"}, {"0", "2"}}));
    CliResult d = run_cli("dual " + l);
    CHECK(parse_document(d.out, "out")["generators"] ==
          Json::array({Json::array({"1", "0"}), Json::array({"1/2", "1/2"})}));
}

TEST_CASE("norm and member") {
    std::string l = write_doc("norm_l.json", lattice_doc({{"1", "1"}, {"0", "2"}}));
    std::string v = write_doc("v.json", Json::array({"2", "2"}));
    std::string zero = write_doc("zero.json", Json::array({"0", "0"}));

    CHECK(parse_document(run_cli("norm " + l + " " + v).out, "out") ==
          Json{{"exponent", -1}});
    CHECK(parse_document(run_cli("norm " + l + " " + zero).out, "out") ==
          Json{{"exponent", nullptr}});
    CHECK(parse_document(run_cli("member " + l + " " + v).out, "out") ==
          Json{{"member", true}});

    std::string outside = write_doc("w.json", Json::array({"1", "0"}));
    CHECK(parse_document(run_cli("member " + l + " " + outside).out, "out") ==
          Json{{"member", false}});
}

TEST_CASE("relation commands") {
    Json rel;
    rel["p"] = 2;
    rel["n"] = 1;
    rel["generators"] = Json::array({Json::array({"1", "1"}), Json::array({"0", "4"})});
    std::string h = write_doc("h.json", rel);

    CliResult parts = run_cli("rel-parts " + h);
    CHECK(parts.exit_code == 0);
    Json pj = parse_document(parts.out, "out");
    CHECK(pj["dom"]["generators"] == Json::array({Json::array({"1"})}));
    CHECK(pj["im"]["generators"] == Json::array({Json::array({"1"})}));
    CHECK(pj["ker"]["generators"] == Json::array({Json::array({"4"})}));
    CHECK(pj["indef"]["generators"] == Json::array({Json::array({"4"})}));

    std::string o1 = write_doc("o1.json", lattice_doc({{"1"}}));
    CHECK(parse_document(run_cli("rel-act " + h + " " + o1).out, "out")["generators"] ==
          Json::array({Json::array({"1"})}));

    CliResult comp = run_cli("rel-compose " + h + " " + h);
    Json cj = parse_document(comp.out, "out");
    CHECK(cj["blocks"] == Json::array({"source", "target"}));
    CHECK(cj["generators"] ==
          Json::array({Json::array({"4", "0"}), Json::array({"1", "1"})}));

    CliResult st = run_cli("rel-structure " + h);
    CHECK(parse_document(st.out, "out") ==
          Json{{"p", 2}, {"n", 1}, {"entries", {{"1"}}}});
}

TEST_CASE("graph-approx") {
    Json g;
    g["p"] = 2;
    g["n"] = 1;
    g["entries"] = Json::array({Json::array({"2"})});
    std::string gp = write_doc("g.json", g);
    std::string o1 = write_doc("ga_o1.json", lattice_doc({{"1"}}));

    CliResult r = run_cli("graph-approx " + gp + " --j 3 --lattice " + o1);
    CHECK(r.exit_code == 0);
    Json j = parse_document(r.out, "out");
    CHECK(j["act"]["generators"] == Json::array({Json::array({"2"})}));
    CHECK(j["threshold"].get<long>() >= 1);
    CHECK(j["relation"]["n"] == 1);

    CHECK(run_cli("graph-approx " + gp).exit_code == 2); // --j is required
}

TEST_CASE("check commands report and gate") {
    CliResult t = run_cli("check-theorem --p 2 --n 1 --bound 2 --trials 25 --seed 3");
    CHECK(t.exit_code == 0);
    Json tj = parse_document(t.out, "out");
    CHECK(tj["command"] == "check-theorem");
    CHECK(tj["trials"] == 25);
    CHECK(tj["violations"] == 0);
    CHECK(tj["first_counterexample"].is_null());

    CliResult l = run_cli("check-lemmas --p 2 --n 1 --bound 1 --trials 5 --window 1 --seed 3");
    CHECK(l.exit_code == 0);
    Json lj = parse_document(l.out, "out");
    CHECK(lj["violations"] == 0);
    CHECK(lj["checks"].size() == 10);

    CliResult o = run_cli("oracle-diff --p 2 --n 1 --window 1 --trials 10 --seed 3");
    CHECK(o.exit_code == 0);
    Json oj = parse_document(o.out, "out");
    CHECK(oj["violations"] == 0);
    CHECK(oj["checks"].size() == 5);
}

TEST_CASE("--out writes the report to a file") {
    std::string in = write_doc("out_in.json", lattice_doc({{"1", "0"}, {"0", "1"}}));
    fs::path target = work_dir() / "result.json";
    CliResult r = run_cli("--out " + target.string() + " canon " + in);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(target);
    REQUIRE(f.good());
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(parse_document(text, "file")["n"] == 2);
}

TEST_CASE("failure modes exit with 2") {
    CHECK(run_cli("canon /nonexistent/x.json").exit_code == 2);
    std::string bad = (work_dir() / "bad.json").string();
    std::ofstream(bad) << "{not json";
    CHECK(run_cli("canon " + bad).exit_code == 2);
    std::string degenerate =
        write_doc("degenerate.json",
                  Json{{"p", 2}, {"n", 2}, {"generators", {{"1", "2"}, {"2", "4"}}}});
    CHECK(run_cli("canon " + degenerate).exit_code == 2);
    CHECK(run_cli("").exit_code == 2);           // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 2); // unknown subcommand
    CHECK(run_cli("canon").exit_code == 2);      // missing input
}

} // TEST_SUITE
