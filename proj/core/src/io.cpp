#include "skewtab/io.hpp"

#include <sstream>

#include "json.hpp"
#include "skewtab/errors.hpp"

using nlohmann::json;

namespace skewtab {

namespace {

json payload_json(const ColoredLattice& L, int v, const ExportOptions& opt) {
    const auto& p = L.payload[v];
    switch (opt.style) {
        case PayloadStyle::GTColumns: {
            json cols = json::array();
            int m = opt.gt_m;
            for (size_t i = 0; i * m < p.size(); ++i)
                cols.push_back(std::vector<int>(p.begin() + i * m, p.begin() + (i + 1) * m));
            return cols;
        }
        case PayloadStyle::OrthRows: return opt.rows.at(v);
        case PayloadStyle::Flat: return p;
    }
    return p;
}

}  // namespace

std::string gt_json(const GTParallelogram& x) {
    json g = json::array();
    for (int i = 0; i <= x.n; ++i) {
        json col = json::array();
        for (int r = 0; r < x.m; ++r) col.push_back(x.t(i, r));
        g.push_back(col);
    }
    return json{{"v", 1}, {"n", x.n}, {"m", x.m}, {"g", g}}.dump();
}

std::string lattice_json(const ColoredLattice& L, const ExportOptions& opt) {
    json doc;
    doc["v"] = 1;
    doc["shape"] = opt.shape;
    doc["colors"] = L.num_colors;
    const char* key = opt.style == PayloadStyle::OrthRows ? "c" : "g";
    json vs = json::array();
    for (int v = 0; v < L.size(); ++v)
        vs.push_back({{"id", v}, {key, payload_json(L, v, opt)}, {"wt", L.weight[v]}, {"rank", L.rank[v]}});
    doc["vertices"] = vs;
    json es = json::array();
    for (size_t e = 0; e < L.edges.size(); ++e) {
        json E{{"src", L.edges[e].src}, {"dst", L.edges[e].dst}, {"color", L.edges[e].color}};
        if (opt.tags) {
            E["X"] = (*opt.tags)[e].X.get_str();
            E["Y"] = (*opt.tags)[e].Y.get_str();
        }
        if (opt.products) E["P"] = (*opt.products)[e].get_str();
        es.push_back(E);
    }
    doc["edges"] = es;
    return doc.dump(1);
}

std::string lattice_dot(const ColoredLattice& L, const ExportOptions& opt) {
    std::ostringstream os;
    os << "digraph skewtab {\n  // v=1 shape=" << opt.shape << "\n  rankdir=BT;\n";
    for (int v = 0; v < L.size(); ++v) {
        os << "  n" << v << " [label=\"" << L.rank[v] << " : (";
        for (size_t k = 0; k < L.weight[v].size(); ++k) os << (k ? "," : "") << L.weight[v][k];
        os << ")\"];\n";
    }
    for (size_t e = 0; e < L.edges.size(); ++e) {
        os << "  n" << L.edges[e].src << " -> n" << L.edges[e].dst << " [label=\"c" << L.edges[e].color;
        if (opt.tags) os << " " << (*opt.tags)[e].X.get_str() << "," << (*opt.tags)[e].Y.get_str();
        if (opt.products) os << " " << (*opt.products)[e].get_str();
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string certificate_json(const Certificate& c) {
    json j{{"v", 1},
           {"status", c.ok ? "certified" : "violation"},
           {"checked_diamonds", c.checked_diamonds},
           {"checked_crossings", c.checked_crossings}};
    if (!c.ok) j["violation"] = c.violation;
    return j.dump();
}

namespace {

void flatten(const json& j, std::vector<int>& out) {
    if (j.is_array())
        for (const auto& x : j) flatten(x, out);
    else if (j.is_number_integer())
        out.push_back(j.get<int>());
    else
        throw ParseError("payload entries must be integers");
}

}  // namespace

ImportedLattice parse_lattice_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || doc.value("v", 0) != 1) throw ParseError("missing \"v\":1");
        ImportedLattice out;
        out.shape = doc.value("shape", "");
        const auto& vs = doc.at("vertices");
        const auto& es = doc.at("edges");
        int colors = doc.value("colors", 0);
        for (const auto& E : es) colors = std::max(colors, E.at("color").get<int>());
        out.L.num_colors = colors;
        for (size_t k = 0; k < vs.size(); ++k) {
            const auto& V = vs[k];
            if (V.at("id").get<size_t>() != k) throw ParseError("vertex ids must be 0..N-1 in order");
            std::vector<int> p;
            if (V.contains("g")) flatten(V["g"], p);
            else if (V.contains("c")) flatten(V["c"], p);
            else p = {static_cast<int>(k)};
            out.L.payload.push_back(p);
            if (V.contains("wt")) out.L.weight.push_back(V["wt"].get<Weight>());
        }
        if (!out.L.weight.empty() && out.L.weight.size() != out.L.payload.size())
            throw ParseError("weights missing on some vertices");
        out.has_tags = !es.empty();
        out.has_products = !es.empty();
        int n = static_cast<int>(vs.size());
        for (const auto& E : es) {
            int s = E.at("src").get<int>(), d = E.at("dst").get<int>();
            if (s < 0 || s >= n || d < 0 || d >= n) throw ParseError("edge endpoint out of range");
            out.L.edges.push_back({s, d, E.at("color").get<int>(), -1});
            if (E.contains("X") && E.contains("Y"))
                out.tags.push_back({parse_rational(E["X"].get<std::string>()), parse_rational(E["Y"].get<std::string>())});
            else
                out.has_tags = false;
            if (E.contains("P")) out.products.push_back(parse_rational(E["P"].get<std::string>()));
            else out.has_products = false;
        }
        if (!out.has_tags) out.tags.clear();
        if (!out.has_products) out.products.clear();
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed lattice document: ") + e.what());
    }
}

}  // namespace skewtab
