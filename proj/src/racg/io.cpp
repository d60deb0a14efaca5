#include "relhyp/racg.hpp"

#include <sstream>

namespace relhyp::racg {

Graph parse_graph(std::string_view text) {
    Graph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        try {
            if (tok[0] == "v" && tok.size() == 2) {
                g.add_vertex(tok[1]);
            } else if (tok[0] == "e" && tok.size() == 3) {
                const std::size_t a = g.require(tok[1]);
                const std::size_t b = g.require(tok[2]);
                if (a != b && g.adjacent(a, b)) {
                    throw InputError("duplicate edge " + tok[1] + " " + tok[2]);
                }
                g.add_edge(a, b);
            } else {
                throw InputError("expected 'v <name>' or 'e <name> <name>'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(number, e.what());
        }
    }
    return g;
}

std::string format_graph(const Graph& g) {
    std::string out;
    for (const auto& n : g.names()) {
        out += "v " + n + "\n";
    }
    for (const auto& [a, b] : g.edges()) {
        out += "e " + g.name(a) + " " + g.name(b) + "\n";
    }
    return out;
}

}  // namespace relhyp::racg
