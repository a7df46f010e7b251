#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "skewtab/skewtab.hpp"

using namespace skewtab;
using json = nlohmann::ordered_json;

namespace {

struct Config {
    std::string command;
    std::string target;
    bool json_out = false;
    bool dot_out = false;
    std::string out_path;
    int max_vertices = 2000;
    std::string sweep;
    std::string nu;
    bool float_sanity = false;
    int jobs = 0;
};

enum Exit { Ok = 0, VerifyFail = 1, ParseFail = 2, ConstraintFail = 3 };

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out_path);
    if (!f) throw ConstraintError("cannot write " + cfg.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + ")";
}

Weight parse_nu(const std::string& text, int rank) {
    Weight w;
    if (text.empty()) return Weight(rank, 0);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("--nu expects comma-separated nonnegative integers");
        w.push_back(std::stoi(tok));
    }
    if (static_cast<int>(w.size()) != rank)
        throw ConstraintError("--nu needs " + std::to_string(rank) + " coordinates");
    return w;
}

std::string text_summary(const std::string& label, const ColoredLattice& L) {
    std::ostringstream os;
    int length = L.rank[L.top];
    os << label << "\n";
    os << "vertices: " << L.size() << "\n";
    os << "edges: " << L.edges.size() << "\n";
    os << "length: " << length << "\n";
    os << "rgf: " << rgf(L).str() << "\n";
    return os.str();
}

// exports carry coefficients: X,Y for skew lattices, P for orthogonal ones
std::string render_skew(const Config& cfg, const SkewLattice& SL, bool with_tags) {
    TaggedLattice TL;
    ExportOptions opt;
    opt.shape = SL.shape.str();
    opt.style = PayloadStyle::GTColumns;
    opt.gt_m = SL.shape.m();
    if (with_tags) {
        TL = tag_skew(SL);
        opt.tags = &TL.tags;
    }
    if (cfg.json_out) return lattice_json(SL.L, opt);
    if (cfg.dot_out) return lattice_dot(SL.L, opt);
    return text_summary(opt.shape, SL.L);
}

std::string render_orth(const Config& cfg, const OrthLattice& OL, bool with_products) {
    ExportOptions opt;
    std::vector<Rational> P;
    opt.shape = OL.spec.str();
    opt.style = PayloadStyle::OrthRows;
    for (int v = 0; v < OL.L.size(); ++v) opt.rows.push_back(OL.array_rows(v));
    if (with_products) {
        P = edge_products(OL);
        opt.products = &P;
    }
    if (cfg.json_out) return lattice_json(OL.L, opt);
    if (cfg.dot_out) return lattice_dot(OL.L, opt);
    return text_summary(opt.shape, OL.L);
}

int cmd_build(const Config& cfg, bool with_coeffs) {
    if (looks_like_orth(cfg.target)) {
        emit(cfg, render_orth(cfg, build_orth(parse_orth(cfg.target)), with_coeffs));
    } else {
        emit(cfg, render_skew(cfg, build(parse_shape(cfg.target)), with_coeffs));
    }
    return Ok;
}

json report_checks(const InstanceReport& r) {
    json arr = json::array();
    for (const auto& c : r.checks) {
        json j = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

int finish_verify(const Config& cfg, const std::string& label, int vertices, const Certificate& cert,
                  const std::vector<CheckResult>& checks) {
    bool ok = cert.ok;
    std::string violation = cert.violation;
    json arr = json::array();
    for (const auto& c : checks) {
        json j = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
        if (!c.pass && ok) {
            ok = false;
            violation = c.name + (c.detail.empty() ? "" : ": " + c.detail);
        }
    }
    json doc = json::parse(certificate_json(cert));
    doc["status"] = ok ? "certified" : "violation";
    doc["violation"] = ok ? json(nullptr) : json(violation);
    doc["instance"] = label;
    doc["vertices"] = vertices;
    doc["checks"] = arr;
    emit(cfg, doc.dump(2));
    return ok ? Ok : VerifyFail;
}

CheckResult lie_check(const TaggedLattice& TL, const RootData& rd, int cap) {
    CheckResult c{"lie_relations", true, ""};
    if (TL.L.size() > cap) {
        c.detail = "skipped: above --max-vertices";
        return c;
    }
    auto r = verify_lie_relations(generator_matrices(TL), rd, cap);
    c.pass = r.ok;
    c.detail = r.ok ? std::to_string(r.relations_checked) + " relations" : r.failure;
    return c;
}

int verify_file(const Config& cfg) {
    std::ifstream f(cfg.target);
    if (!f) throw ParseError("cannot read " + cfg.target);
    std::stringstream buf;
    buf << f.rdbuf();
    ImportedLattice im = parse_lattice_json(buf.str());
    std::optional<RootData> rd;
    if (!im.shape.empty()) {
        if (looks_like_orth(im.shape)) {
            auto sp = parse_orth(im.shape);
            rd = root_data(sp.kind, sp.n);
        } else {
            rd = root_data(Kind::A, parse_shape(im.shape).n - 1);
        }
    }
    std::vector<CheckResult> checks;
    Certificate cert;
    try {
        im.L.finalize();
    } catch (const InvariantError& e) {
        cert.ok = false;
        cert.violation = std::string("not a graded lattice with unique extremes: ") + e.what();
        return finish_verify(cfg, im.shape, static_cast<int>(im.L.payload.size()), cert, checks);
    }
    checks.push_back({"diamond_colored", verify_diamond_colored(im.L), ""});
    if (rd) checks.push_back({"structured", is_structured(im.L, *rd), ""});
    if (im.has_tags) {
        TaggedLattice TL{im.L, im.tags};
        cert = dc_verify(TL);
        if (rd && cert.ok) checks.push_back(lie_check(TL, *rd, cfg.max_vertices));
    } else if (im.has_products) {
        cert = dc_verify_products(im.L, im.products);
    } else {
        cert.ok = false;
        cert.violation = "document carries no edge coefficients";
    }
    return finish_verify(cfg, im.shape, im.L.size(), cert, checks);
}

int cmd_verify(const Config& cfg) {
    if (cfg.target.size() > 5 && cfg.target.ends_with(".json")) return verify_file(cfg);
    std::vector<CheckResult> checks;
    if (looks_like_orth(cfg.target)) {
        OrthLattice OL = build_orth(parse_orth(cfg.target));
        auto P = edge_products(OL);
        Certificate cert = dc_verify_products(OL.L, P);
        checks.push_back({"structured", is_structured(OL.L, OL.rd), ""});
        checks.push_back({"diamond_colored", verify_diamond_colored(OL.L), ""});
        checks.push_back({"rgf_product_formula", rgf_orth_check(OL), ""});
        auto rr = restriction_check(OL);
        checks.push_back({"restriction", rr.ok, rr.failure});
        if (cfg.float_sanity) {
            double res = float_sanity_residual(OL, P);
            checks.push_back({"float_sanity", res < 1e-9, "residual=" + std::to_string(res)});
        }
        return finish_verify(cfg, OL.spec.str(), OL.L.size(), cert, checks);
    }
    SkewLattice SL = build(parse_shape(cfg.target));
    RootData rd = root_data(Kind::A, SL.shape.n - 1);
    TaggedLattice TL = tag_skew(SL);
    Certificate cert = dc_verify(TL);
    checks.push_back({"structured", is_structured(SL.L, rd), ""});
    checks.push_back({"diamond_colored", verify_diamond_colored(SL.L), ""});
    checks.push_back(lie_check(TL, rd, cfg.max_vertices));
    return finish_verify(cfg, SL.shape.str(), SL.L.size(), cert, checks);
}

int cmd_decompose(const Config& cfg) {
    SkewShape s = parse_shape(cfg.target);
    Weight nu = parse_nu(cfg.nu, s.n - 1);
    SchurDecomposition d;
    try {
        d = zs_decompose(s, nu);
    } catch (const InvariantError& e) {
        std::cerr << "chi identity failed: " << e.what() << "\n";
        return VerifyFail;
    }
    if (cfg.json_out) {
        json doc = {{"v", 1}, {"shape", s.str()}, {"nu", nu}, {"admissible", d.admissible}};
        json arr = json::array();
        for (const auto& [w, k] : d.constituents) {
            arr.push_back({{"omega", w},
                           {"partition", weight_to_partition(w)},
                           {"multiplicity", k},
                           {"dim", weyl_dim_typeA(w)}});
        }
        doc["constituents"] = arr;
        doc["multiplicity_free"] = is_multiplicity_free(d);
        emit(cfg, doc.dump(2));
        return Ok;
    }
    std::ostringstream os;
    for (const auto& [w, k] : d.constituents) {
        os << weight_str(w) << " × " << k << " × " << weyl_dim_typeA(w) << "   partition "
           << weight_str(weight_to_partition(w)) << "\n";
    }
    emit(cfg, os.str());
    return Ok;
}

template <class Item, class F>
std::vector<InstanceReport> run_parallel(const std::vector<Item>& items, F f, int jobs) {
    std::vector<InstanceReport> out(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < items.size(); k = next++) {
            try {
                out[k] = f(items[k]);
            } catch (const std::exception& e) {
                out[k].checks.push_back({"build", false, e.what()});
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

int cmd_sweep(const Config& cfg) {
    std::string text = !cfg.sweep.empty() ? cfg.sweep : cfg.target;
    SweepSpec sp = parse_sweep(text);
    int jobs = cfg.jobs > 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<InstanceReport> reps;
    if (sp.orth) {
        auto items = sweep_orth(sp);
        OrthCheckOptions opt;
        opt.float_sanity = cfg.float_sanity;
        reps = run_parallel(items, [&](const OrthSpec& o) { return check_orth(o, opt); }, jobs);
        for (size_t k = 0; k < items.size(); ++k)
            if (reps[k].instance.empty()) reps[k].instance = items[k].str();
    } else {
        auto items = sweep_shapes(sp);
        SkewCheckOptions opt;
        opt.lie_cap = cfg.max_vertices;
        reps = run_parallel(items, [&](const SkewShape& s) { return check_skew(s, opt); }, jobs);
        for (size_t k = 0; k < items.size(); ++k)
            if (reps[k].instance.empty()) reps[k].instance = items[k].str();
    }
    int failed = 0;
    for (const auto& r : reps) failed += !r.pass();
    if (cfg.json_out) {
        json doc = {{"v", 1}, {"sweep", text}, {"instances", reps.size()}, {"failed", failed}};
        json arr = json::array();
        for (const auto& r : reps)
            arr.push_back({{"instance", r.instance}, {"vertices", r.vertices}, {"pass", r.pass()},
                           {"checks", report_checks(r)}});
        doc["results"] = arr;
        emit(cfg, doc.dump(2));
    } else {
        std::ostringstream os;
        for (const auto& r : reps) {
            os << r.instance << "\t" << r.vertices;
            for (const auto& c : r.checks) os << "\t" << c.name << "=" << (c.pass ? "PASS" : "FAIL");
            os << "\n";
            for (const auto& c : r.checks)
                if (!c.pass) os << "  " << c.name << ": " << c.detail << "\n";
        }
        os << "instances " << reps.size() << ", failed " << failed << "\n";
        emit(cfg, os.str());
    }
    return failed ? VerifyFail : Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew-tabular lattices and representation diagrams"};
    Config cfg;
    app.add_option("command", cfg.command, "build | verify | decompose | sweep | export")
        ->check(CLI::IsMember({"build", "verify", "decompose", "sweep", "export"}));
    app.add_option("target", cfg.target, "shape P/Q;n, orth spec B:n,m or D:n,m,spin, sweep spec, or lattice JSON file");
    app.add_flag("--json", cfg.json_out, "JSON output");
    app.add_flag("--dot", cfg.dot_out, "DOT output");
    app.add_option("--out", cfg.out_path, "write output to PATH");
    app.add_option("--max-vertices", cfg.max_vertices, "largest lattice for matrix relation checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--sweep", cfg.sweep, "cells<=K,n<=N or B:n<=N,m<=M");
    app.add_option("--nu", cfg.nu, "a,b,... in omega-coordinates");
    app.add_flag("--float-sanity", cfg.float_sanity, "double precision residual check on orthogonal lattices");
    app.add_option("--jobs", cfg.jobs, "sweep worker threads");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ParseFail;
    }
    if (cfg.command.empty() && !cfg.sweep.empty()) cfg.command = "sweep";
    if (cfg.command.empty()) {
        std::cerr << "missing command\n";
        return ParseFail;
    }
    if (cfg.json_out) cfg.dot_out = false;
    try {
        if (cfg.command != "sweep" && cfg.target.empty()) throw ParseError("missing shape or spec");
        if (cfg.command == "build") return cmd_build(cfg, false);
        if (cfg.command == "export") return cmd_build(cfg, true);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "decompose") return cmd_decompose(cfg);
        return cmd_sweep(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return ParseFail;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return ConstraintFail;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return ConstraintFail;
    } catch (const InvariantError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return VerifyFail;
    }
}
