#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>

#include "skewtab/skewtab.hpp"

using namespace skewtab;
using json = nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("lattice JSON round trip") {
    auto SL = build(parse_shape("3,3,1/2,0,0;3"));
    auto TL = tag_skew(SL);
    ExportOptions opt;
    opt.shape = SL.shape.str();
    opt.style = PayloadStyle::GTColumns;
    opt.gt_m = SL.shape.m();
    opt.tags = &TL.tags;
    auto text = lattice_json(SL.L, opt);
    auto doc = json::parse(text);
    CHECK(doc["v"] == 1);
    CHECK(doc["vertices"].size() == 21);
    CHECK(lattice_json(SL.L, opt) == text);
    auto im = parse_lattice_json(text);
    CHECK(im.has_tags);
    CHECK(im.shape == SL.shape.str());
    im.L.finalize();
    CHECK(im.L.size() == 21);
    CHECK(im.L.edges.size() == SL.L.edges.size());
    CHECK(dc_verify(TaggedLattice{im.L, im.tags}).ok);
}

TEST_CASE("DOT output") {
    auto OL = build_orth(parse_orth("D:4,1"));
    auto dot = lattice_dot(OL.L, ExportOptions{OL.spec.str()});
    std::regex node(R"(\n\s*n\d+ \[label=)");
    auto count = std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator());
    CHECK(count == 8);
    CHECK(dot.find("label=\"c") != std::string::npos);
}

TEST_CASE("certificate JSON") {
    Certificate c;
    c.checked_diamonds = 3;
    auto doc = json::parse(certificate_json(c));
    CHECK(doc["v"] == 1);
    CHECK(doc["status"] == "certified");
    c.ok = false;
    c.violation = "x";
    CHECK(json::parse(certificate_json(c))["status"] == "violation");
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_lattice_json("{"), ParseError);
    CHECK_THROWS_AS(parse_lattice_json("{\"v\":2}"), ParseError);
    CHECK_THROWS_AS(parse_lattice_json("{\"v\":1,\"vertices\":[{\"id\":0}],\"edges\":[{\"src\":0,\"dst\":5,\"color\":1}]}"),
                    ParseError);
}

}

#ifdef SKEWTAB_CLI
namespace {
struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SKEWTAB_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    int st = pclose(p);
    return {WEXITSTATUS(st), out};
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build") {
    auto r = run("build '3,3,1/2,0,0;3'");
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices: 21") != std::string::npos);
    r = run("build '1/0;2' --json");
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["v"] == 1);
    CHECK(doc["vertices"].size() == 2);
    r = run("build D:4,1 --dot");
    CHECK(r.code == 0);
    std::regex node(R"(\n\s*n\d+ \[label=)");
    CHECK(std::distance(std::sregex_iterator(r.out.begin(), r.out.end(), node), std::sregex_iterator()) == 8);
    // json wins over dot
    r = run("build '1/0;2' --dot --json");
    CHECK(json::parse(r.out)["v"] == 1);
}

TEST_CASE("exit codes") {
    CHECK(run("build '3,x/0;2'").code == 2);
    CHECK(run("build 'oops'").code == 2);
    CHECK(run("frobnicate '1/0;2'").code == 2);
    CHECK(run("build '2,1/3,0;2'").code == 3);
    CHECK(run("build '1,1,1/0,0,0;2'").code == 3);
    CHECK(run("build D:4,1,2").code == 3);
    CHECK(run("decompose '1/0;2' --nu 1,2").code == 3);
}

TEST_CASE("verify") {
    auto r = run("verify '3,3,1/2,0,0;3'");
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["v"] == 1);
    CHECK(doc["status"] == "certified");
    CHECK(run("verify B:3,2").code == 0);
    CHECK(run("verify D:4,1 --float-sanity").code == 0);
}

TEST_CASE("verify a mutated file") {
    std::string good = "skewtab_cli_good.json", bad = "skewtab_cli_bad.json";
    CHECK(run("export '3,3,1/2,0,0;3' --json --out " + good).code == 0);
    CHECK(run("verify " + good).code == 0);
    std::ifstream in(good);
    auto doc = json::parse(in);
    doc["edges"][5]["Y"] = "7";
    std::ofstream(bad) << doc.dump();
    auto r = run("verify " + bad);
    CHECK(r.code == 1);
    auto cert = json::parse(r.out);
    CHECK(cert["status"] == "violation");
    CHECK(cert["violation"].is_string());
    CHECK(run("verify missing_file.json").code == 2);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("export of an orthogonal lattice carries products") {
    auto r = run("export B:3,2 --json");
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["vertices"].size() == 35);
    CHECK(doc["edges"][0].contains("P"));
}

TEST_CASE("decompose") {
    auto r = run("decompose '3,3,1/2,0,0;3'");
    CHECK(r.code == 0);
    CHECK(r.out.find("(1,2) × 1 × 15") != std::string::npos);
    CHECK(r.out.find("(2,0) × 1 × 6") != std::string::npos);
    r = run("decompose '4,3,1/2,0,0;3' --json");
    CHECK(json::parse(r.out)["constituents"].size() == 4);
    r = run("decompose '1/0;2'");
    CHECK(r.out.find("(1) × 1 × 2") != std::string::npos);
    CHECK(run("decompose '3,3/2,0;3' --nu 1,1").code == 0);
}

TEST_CASE("sweeps") {
    auto r = run("sweep 'cells≤6,n≤3' --json");
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["failed"] == 0);
    CHECK(doc["instances"] > 100);
    bool has_duality = false;
    for (const auto& c : doc["results"][0]["checks"]) has_duality |= c["name"] == "dualities";
    CHECK(has_duality);
    CHECK(run("--sweep 'B:n<=3,m<=2'").code == 0);
    CHECK(run("sweep 'D:n<=5,m<=2'").code == 0);
    CHECK(run("sweep 'cells<6'").code == 2);
}

TEST_CASE("output is deterministic") {
    CHECK(run("export '3,3/2,0;3' --json").out == run("export '3,3/2,0;3' --json").out);
    CHECK(run("sweep 'cells<=4,n<=3' --json").out == run("sweep 'cells<=4,n<=3' --json").out);
}

}
#endif
