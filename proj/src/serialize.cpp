#include "affgraph/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace affgraph {

using Json = nlohmann::ordered_json;

namespace {

std::string var_name(int k) { return "z" + std::to_string(k + 1); }

Json weight_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"exps", m.to_vector(p.nvars())}, {"coef", rational_to_string(c)}});
    return terms;
}

LaurentPoly weight_from_json(const Json& j, int nvars) {
    LaurentPoly p(nvars);
    for (const auto& t : j) {
        const auto exps = t.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector of the wrong length");
        p.add_term(Monomial::from(exps), rational_from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\" ") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* type_color(int type) {
    static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
    if (type < 0) return "gray";
    return palette[type % 9];
}

GraphDocument base_document(const AffineCartanData& d, const std::vector<int>& jprime) {
    GraphDocument doc;
    doc.type = d.name();
    doc.jprime = jprime;
    return doc;
}

}  // namespace

GraphDocument document_of(const AffineCartanData& d, const GammaGraph& g) {
    GraphDocument doc = base_document(d, g.jprime);
    doc.graph = kind_name(g.kind);
    doc.legend = g.legend;
    doc.words = g.words;
    doc.digraph = g.graph;
    return doc;
}

GraphDocument document_of(const AffineCartanData& d, const std::vector<int>& jprime, const ParticleGraph& p) {
    GraphDocument doc = base_document(d, jprime);
    doc.model = "particle";
    doc.graph = "gamma";
    doc.legend = p.legend;
    for (const auto& w : p.words) doc.words.push_back(w.str());
    doc.digraph = p.graph;
    return doc;
}

GraphDocument document_of(const AffineCartanData& d, const std::vector<int>& jprime, const TableauGraph& t) {
    GraphDocument doc = base_document(d, jprime);
    doc.model = "tableau";
    doc.graph = "gamma";
    for (const auto& k : t.tableaux) doc.words.push_back(k.str());
    doc.digraph = t.graph;
    return doc;
}

std::string to_json(const GraphDocument& doc) {
    Json j;
    j["model"] = doc.model;
    j["graph"] = doc.graph;
    j["type"] = doc.type;
    j["jprime"] = doc.jprime;
    j["nvars"] = doc.digraph.nvars();
    Json legend = Json::object();
    for (std::size_t k = 0; k < doc.legend.size(); ++k) legend[var_name(static_cast<int>(k))] = doc.legend[k];
    j["legend"] = legend;
    Json vertices = Json::array();
    for (int v = 0; v < doc.digraph.size(); ++v) {
        const std::string& label = doc.digraph.label(v);
        const std::string word = v < static_cast<int>(doc.words.size()) ? doc.words[v] : label;
        vertices.push_back({{"id", v}, {"word", word}, {"label", label}});
    }
    j["vertices"] = vertices;
    Json edges = Json::array();
    for (const auto& e : doc.digraph.edges())
        edges.push_back({{"src", e.src}, {"dst", e.dst}, {"type", e.type}, {"weight", weight_json(e.weight)}});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

GraphDocument from_json(const std::string& text) {
    try {
        const Json j = Json::parse(text);
        GraphDocument doc;
        doc.model = j.value("model", "root-datum");
        doc.graph = j.value("graph", "");
        doc.type = j.value("type", "");
        doc.jprime = j.value("jprime", std::vector<int>{});
        const int nvars = j.at("nvars").get<int>();
        if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
        const Json& legend = j.at("legend");
        for (int k = 0; k < nvars; ++k) doc.legend.push_back(legend.value(var_name(k), ""));
        if (legend.size() != static_cast<std::size_t>(nvars) && !legend.empty())
            throw std::invalid_argument("legend does not match nvars");
        doc.digraph = WeightedDigraph(nvars);
        for (const auto& v : j.at("vertices")) {
            if (v.at("id").get<int>() != doc.digraph.size()) throw std::invalid_argument("vertex ids must be 0, 1, 2, ...");
            doc.digraph.add_vertex(v.at("label").get<std::string>());
            doc.words.push_back(v.at("word").get<std::string>());
        }
        for (const auto& e : j.at("edges")) {
            const int src = e.at("src").get<int>(), dst = e.at("dst").get<int>();
            if (src < 0 || dst < 0 || src >= doc.digraph.size() || dst >= doc.digraph.size())
                throw std::invalid_argument("edge endpoint out of range");
            doc.digraph.add_edge(src, dst, e.at("type").get<int>(), weight_from_json(e.at("weight"), nvars));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string to_dot(const GraphDocument& doc) {
    std::ostringstream os;
    os << "digraph " << quoted(doc.graph.empty() ? "graph" : doc.graph) << " {\n";
    if (!doc.legend.empty()) {
        std::string legend;
        for (std::size_t k = 0; k < doc.legend.size(); ++k)
            legend += (k ? ", " : "") + var_name(static_cast<int>(k)) + " = " + doc.legend[k];
        os << "  label=" << quoted(legend) << ";\n";
    }
    for (int v = 0; v < doc.digraph.size(); ++v) os << "  v" << v << " [label=" << quoted(doc.digraph.label(v)) << "];\n";
    for (const auto& e : doc.digraph.edges()) {
        os << "  v" << e.src << " -> v" << e.dst << " [color=" << type_color(e.type);
        if (e.type >= 0) os << ", taillabel=" << quoted(std::to_string(e.type));
        if (!e.weight.is_one()) os << ", label=" << quoted(e.weight.to_string());
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_csv(const GraphDocument& doc) {
    std::ostringstream os;
    os << "src,dst,type,weight\n";
    for (const auto& e : doc.digraph.edges())
        os << csv_field(doc.digraph.label(e.src)) << ',' << csv_field(doc.digraph.label(e.dst)) << ',' << e.type << ','
           << csv_field(e.weight.to_string()) << '\n';
    return os.str();
}

std::string matrix_string(const std::vector<std::vector<LaurentPoly>>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].to_string();
        s += "]";
    }
    return s + "]";
}

std::string structure_table_csv(const StructureTable& t) {
    std::ostringstream os;
    os << "# verdict: " << verdict_name(t.verdict) << "\n";
    for (std::size_t k = 0; k < t.legend.size(); ++k) os << "# " << var_name(static_cast<int>(k)) << " = " << t.legend[k] << "\n";
    os << "xi_j,xi_k,xi_i,coefficient\n";
    for (const auto& e : t.entries)
        os << csv_field(t.words[e.j]) << ',' << csv_field(t.words[e.k]) << ',' << csv_field(t.words[e.i]) << ','
           << csv_field(e.coefficient.to_string()) << '\n';
    return os.str();
}

std::string structure_table_json(const StructureTable& t) {
    Json j;
    j["verdict"] = verdict_name(t.verdict);
    Json legend = Json::object();
    for (std::size_t k = 0; k < t.legend.size(); ++k) legend[var_name(static_cast<int>(k))] = t.legend[k];
    j["legend"] = legend;
    j["words"] = t.words;
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"j", e.j}, {"k", e.k}, {"i", e.i}, {"coefficient", weight_json(e.coefficient)}});
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

}  // namespace affgraph
