#include "cgkit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cgkit/errors.hpp"

namespace cgkit {

using nlohmann::json;

MixedGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("bad graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw input_error("graph json must be an object with 'nodes' and 'edges'");
    std::vector<std::string> nodes;
    for (const auto& n : j["nodes"]) {
        if (!n.is_string()) throw input_error("graph nodes must be strings");
        nodes.push_back(n.get<std::string>());
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
            throw input_error("each edge must be [node, token, node]");
        std::string a = e[0], tok = e[1], b = e[2];
        if (tok == "--")
            edges.push_back(und(a, b));
        else if (tok == "->")
            edges.push_back(dir(a, b));
        else if (tok == "<->")
            edges.push_back(bid(a, b));
        else
            throw input_error("unknown edge token '" + tok + "'");
    }
    return MixedGraph(nodes, edges);
}

std::string graph_to_json(const MixedGraph& g) {
    json j;
    j["nodes"] = g.names();
    json edges = json::array();
    for (const Edge& e : g.edge_list()) {
        const char* tok = e.type == EdgeType::Undirected ? "--"
                          : e.type == EdgeType::Directed ? "->"
                                                         : "<->";
        edges.push_back(json::array({e.a, tok, e.b}));
    }
    j["edges"] = edges;
    return j.dump();
}

MixedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void save_graph(const MixedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << graph_to_json(g) << "\n";
}

std::string graph_to_dot(const MixedGraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& n : g.names()) out << "  \"" << n << "\";\n";
    for (const Edge& e : g.edge_list()) {
        out << "  \"" << e.a << "\" -> \"" << e.b << "\"";
        if (e.type == EdgeType::Undirected)
            out << " [dir=none]";
        else if (e.type == EdgeType::Bidirected)
            out << " [dir=both]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cgkit
