#include "gpp/formats.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "gpp/errors.hpp"

namespace gpp {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void bad_g6(std::size_t offset, const std::string& why) {
    throw InputError("graph6: " + why + " at byte offset " + std::to_string(offset));
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw InputError("graph6: empty input");

    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) bad_g6(0, "long-form length (n > 62) not supported");
    if (first < 63 || first > 125) bad_g6(0, "length byte out of range");
    const int n = first - 63;

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (nbits + 5) / 6;
    if (text.size() - 1 < need) {
        bad_g6(text.size(), "truncated adjacency data (need " + std::to_string(need) +
                                " data bytes)");
    }
    if (text.size() - 1 > need) bad_g6(1 + need, "trailing garbage");

    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) bad_g6(byte, "data byte out of range");
            const int group = c - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Trailing pad bits of the final group must be zero.
    for (; bit < need * 6; ++bit) {
        const std::size_t byte = 1 + bit / 6;
        const unsigned char c = static_cast<unsigned char>(text[byte]);
        if (c < 63 || c > 126) bad_g6(byte, "data byte out of range");
        if (((c - 63) >> (5 - bit % 6)) & 1) bad_g6(byte, "nonzero padding bits");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw InputError("graph6: short form only encodes up to 62 vertices");
    std::string out;
    out += static_cast<char>(n + 63);
    int group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((group << (6 - filled)) + 63);
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    int n = 0;
    Graph g;

    auto fail = [&](const std::string& why) -> void {
        throw InputError("edge list, line " + std::to_string(line_no) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content[0] == '#') continue;
        std::istringstream fields(content);
        if (!have_header) {
            std::string tag;
            fields >> tag;
            if (tag != "n") fail("expected header 'n <count>'");
            if (!(fields >> n) || n < 0) fail("bad vertex count");
            std::string extra;
            if (fields >> extra) fail("unexpected token '" + extra + "' after count");
            g = Graph(n);
            have_header = true;
            continue;
        }
        int u = 0, v = 0;
        if (!(fields >> u >> v)) fail("expected 'u v'");
        std::string extra;
        if (fields >> extra) fail("unexpected token '" + extra + "' after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    if (!have_header) throw InputError("edge list: missing 'n <count>' header");
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v) out << u << " " << v << "\n";
        }
    }
    return out.str();
}

}  // namespace gpp
