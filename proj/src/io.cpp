#include "fibcube/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fibcube {

namespace {

void append_body(std::ostringstream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    if (g.labeled())
        for (int v = 0; v < g.vertex_count(); ++v) out << g.label(v).str() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

bool looks_like_label(const std::string& line) {
    return line.find(' ') == std::string::npos &&
           line.find('\t') == std::string::npos;
}

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(std::string("unexpected end of input: ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::string write_edge_list(const Graph& g, const CubeParams& params) {
    if (!g.labeled())
        throw std::invalid_argument("cube form requires word labels");
    std::ostringstream out;
    out << "# fibcube family=" << family_letter(params.family) << " p=" << params.p
        << " r=" << params.r << " n=" << params.n << '\n';
    append_body(out, g);
    return out.str();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    append_body(out, g);
    return out.str();
}

LoadedGraph read_edge_list(std::istream& in) {
    LoadedGraph loaded;
    std::string line = next_line(in, "count line");
    if (line.rfind("# fibcube", 0) == 0) {
        CubeParams params;
        std::istringstream header(line.substr(9));
        std::string token;
        bool saw_family = false, saw_p = false, saw_r = false, saw_n = false;
        while (header >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("malformed header token: " + token);
            const std::string key = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            if (key == "family") {
                if (value == "O" || value == "o") params.family = Family::O;
                else if (value == "I" || value == "i") params.family = Family::I;
                else throw std::runtime_error("unknown family: " + value);
                saw_family = true;
            } else if (key == "p") {
                params.p = std::stoi(value);
                saw_p = true;
            } else if (key == "r") {
                params.r = std::stoi(value);
                saw_r = true;
            } else if (key == "n") {
                params.n = std::stoi(value);
                saw_n = true;
            } else {
                throw std::runtime_error("unknown header key: " + key);
            }
        }
        if (!saw_family || !saw_p || !saw_r || !saw_n)
            throw std::runtime_error("incomplete cube header");
        validate(params);
        loaded.params = params;
        line = next_line(in, "count line");
    }

    int vertex_count = 0, edge_count = 0;
    {
        std::istringstream counts(line);
        if (!(counts >> vertex_count >> edge_count) || vertex_count < 0 ||
            edge_count < 0)
            throw std::runtime_error("malformed count line: " + line);
    }

    std::vector<Word> labels;
    std::vector<Edge> edges;
    bool expect_labels = loaded.params.has_value();
    if (!expect_labels && vertex_count > 0) {
        // headerless input: a first body line without spaces means labels
        const auto pos = in.tellg();
        std::string probe;
        if (std::getline(in, probe)) {
            if (!probe.empty() && probe.back() == '\r') probe.pop_back();
            expect_labels = looks_like_label(probe);
            in.clear();
            in.seekg(pos);
        }
    }
    if (expect_labels) {
        labels.reserve(static_cast<size_t>(vertex_count));
        for (int v = 0; v < vertex_count; ++v)
            labels.emplace_back(next_line(in, "label line"));
    }
    for (int i = 0; i < edge_count; ++i) {
        std::istringstream pair(next_line(in, "edge line"));
        Edge e;
        if (!(pair >> e.u >> e.v))
            throw std::runtime_error("malformed edge line");
        edges.push_back(e);
    }

    loaded.graph = labels.empty() ? Graph(vertex_count, edges)
                                  : Graph(vertex_count, edges, std::move(labels));
    if (loaded.graph.edge_count() != edge_count)
        throw std::runtime_error("edge count does not match edge lines");
    return loaded;
}

LoadedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph fibcube {\n";
    const auto name = [&](int v) {
        if (g.labeled() && g.label(v).length() > 0) return g.label(v).str();
        return std::to_string(v);
    };
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  \"" << name(v) << "\";\n";
    for (const Edge& e : g.edges())
        out << "  \"" << name(e.u) << "\" -- \"" << name(e.v) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string write_factorization(const Factorization& f) {
    std::ostringstream out;
    out << "factors=" << f.factors.size() << '\n';
    for (const Graph& factor : f.factors) out << write_edge_list(factor);
    for (size_t v = 0; v < f.coordinates.size(); ++v) {
        out << v;
        for (int x : f.coordinates[v]) out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

namespace {

std::string edge_text(const Edge& e) {
    std::ostringstream out;
    out << e.u << '-' << e.v;
    return out.str();
}

}  // namespace

std::string report_line(const ThetaViolation& v) {
    std::ostringstream out;
    out << "coord=" << v.coordinate << ' ' << edge_text(v.e) << ' '
        << edge_text(v.f);
    return out.str();
}

std::string report_line(const ColorThetaViolation& v) {
    std::ostringstream out;
    out << "color=" << v.color << ' ' << edge_text(v.e) << ' ' << edge_text(v.f);
    return out.str();
}

}  // namespace fibcube
