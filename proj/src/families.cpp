#include "gpp/families.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "gpp/errors.hpp"
#include "gpp/formats.hpp"

namespace gpp {
namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

int parse_int(const std::string& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("expected an integer, got '" + s + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Graph build_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    std::vector<int> part_of(n);
    int id = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) part_of[id++] = static_cast<int>(i);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
        }
    }
    return g;
}

Graph build_broom(int s, int r) {
    Graph g(s + r + 1);
    for (int i = 0; i < s; ++i) g.add_edge(i, i + 1);
    for (int j = 1; j <= r; ++j) g.add_edge(0, s + j);
    for (int i = 0; i <= s; ++i) g.set_label(i, "u" + std::to_string(i));
    for (int j = 1; j <= r; ++j) g.set_label(s + j, "v" + std::to_string(j));
    return g;
}

Graph build_kneser2(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    Graph g(static_cast<int>(pairs.size()));
    for (std::size_t u = 0; u < pairs.size(); ++u) {
        g.set_label(static_cast<int>(u), "{" + std::to_string(pairs[u].first) + "," +
                                             std::to_string(pairs[u].second) + "}");
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            auto [a, b] = pairs[u];
            auto [c, d] = pairs[v];
            if (a != c && a != d && b != c && b != d) {
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
            }
        }
    }
    return g;
}

// Vertex (i,j), part i in [a], label j in [r]; adjacent iff both coordinates
// differ. The complete a-partite graph K_{r,..,r} minus the label cliques.
Graph build_tstar(int r, int a) {
    Graph g(r * a);
    auto id = [r](int i, int j) { return i * r + j; };
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < r; ++j) {
            g.set_label(id(i, j), "(" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
        }
    }
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < r; ++j) {
            for (int k = i + 1; k < a; ++k) {
                for (int l = 0; l < r; ++l) {
                    if (j != l) g.add_edge(id(i, j), id(k, l));
                }
            }
        }
    }
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

void FamilySpec::validate() const {
    for (int p : params) require(p >= 0, "size parameters must be nonnegative");
    switch (kind) {
        case Kind::Path:
        case Kind::Complete:
        case Kind::Edgeless:
            require(params.size() == 1, "family takes one parameter");
            break;
        case Kind::Cycle:
            require(params.size() == 1, "cycle takes one parameter");
            require(params[0] >= 3, "cycle needs at least 3 vertices");
            break;
        case Kind::Multipartite: {
            require(params.size() >= 2, "multipartite needs at least 2 parts");
            for (int p : params) require(p >= 1, "multipartite parts must be >= 1");
            break;
        }
        case Kind::Balanced:
            require(params.size() == 2, "balanced takes r and t");
            require(params[0] >= 1, "balanced part size r must be >= 1");
            require(params[1] >= 2, "balanced needs at least 2 parts");
            break;
        case Kind::Broom:
            require(params.size() == 2, "broom takes s and r");
            require(params[0] + params[1] >= 1, "broom needs s + r >= 1");
            break;
        case Kind::Comb:
            require(params.size() == 1 && params[0] >= 1, "comb needs n >= 1");
            break;
        case Kind::Kneser2:
            require(params.size() == 1 && params[0] >= 2, "kneser2 needs n >= 2");
            break;
        case Kind::TStar:
            require(params.size() == 2, "tstar takes r and a");
            require(params[0] >= 1 && params[1] >= 1, "tstar needs r >= 1 and a >= 1");
            break;
        case Kind::Corona:
            require(children.size() == 1, "corona takes one inner graph");
            children[0].validate();
            break;
        case Kind::DisjointUnion:
            for (const auto& c : children) c.validate();
            break;
        case Kind::EdgeListFile:
        case Kind::Graph6:
            require(!text.empty(), "empty graph source");
            break;
    }
}

std::string FamilySpec::name() const {
    auto ints = [this](const char* base) {
        std::string out = base;
        for (int p : params) out += ":" + std::to_string(p);
        return out;
    };
    switch (kind) {
        case Kind::Path: return ints("path");
        case Kind::Cycle: return ints("cycle");
        case Kind::Complete: return ints("complete");
        case Kind::Edgeless: return ints("edgeless");
        case Kind::Multipartite: {
            std::string out = "multipartite:";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(params[i]);
            }
            return out;
        }
        case Kind::Balanced: return ints("balanced");
        case Kind::Broom: return ints("broom");
        case Kind::Comb: return ints("comb");
        case Kind::Kneser2: return ints("kneser2");
        case Kind::TStar: return ints("tstar");
        case Kind::Corona: return "corona:" + children[0].name();
        case Kind::DisjointUnion: {
            std::string out = "disjoint:";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) out += ",";
                out += "(" + children[i].name() + ")";
            }
            return out;
        }
        case Kind::EdgeListFile: return "edge-list:" + text;
        case Kind::Graph6: return "g6:" + text;
    }
    return "?";
}

FamilySpec parse_family_spec(const std::string& text) {
    require(!text.empty(), "empty family spec");
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    auto int_args = [&](std::size_t want) {
        require(!rest.empty(), head + " needs parameters");
        auto fields = split(rest, ':');
        require(fields.size() == want,
                head + " takes " + std::to_string(want) + " parameter(s)");
        std::vector<int> out;
        for (const auto& f : fields) out.push_back(parse_int(f));
        return out;
    };

    FamilySpec spec;
    if (head == "path") {
        spec = FamilySpec::path(int_args(1)[0]);
    } else if (head == "cycle") {
        spec = FamilySpec::cycle(int_args(1)[0]);
    } else if (head == "complete") {
        spec = FamilySpec::complete(int_args(1)[0]);
    } else if (head == "edgeless") {
        spec = FamilySpec::edgeless(int_args(1)[0]);
    } else if (head == "multipartite") {
        require(!rest.empty(), "multipartite needs a part list, e.g. multipartite:8,4");
        std::vector<int> parts;
        for (const auto& f : split(rest, ',')) parts.push_back(parse_int(f));
        spec = FamilySpec::multipartite(std::move(parts));
    } else if (head == "balanced") {
        auto v = int_args(2);
        spec = FamilySpec::balanced(v[0], v[1]);
    } else if (head == "broom") {
        auto v = int_args(2);
        spec = FamilySpec::broom(v[0], v[1]);
    } else if (head == "comb") {
        spec = FamilySpec::comb(int_args(1)[0]);
    } else if (head == "kneser2") {
        spec = FamilySpec::kneser2(int_args(1)[0]);
    } else if (head == "tstar") {
        auto v = int_args(2);
        spec = FamilySpec::tstar(v[0], v[1]);
    } else if (head == "corona") {
        require(!rest.empty(), "corona needs an inner spec, e.g. corona:cycle:6");
        spec = FamilySpec::corona_of(parse_family_spec(rest));
    } else if (head == "disjoint") {
        require(!rest.empty(), "disjoint needs (spec),(spec),...");
        std::vector<FamilySpec> parts;
        std::size_t i = 0;
        while (i < rest.size()) {
            require(rest[i] == '(', "disjoint items must be parenthesized");
            int depth = 0;
            std::size_t j = i;
            for (; j < rest.size(); ++j) {
                if (rest[j] == '(') ++depth;
                if (rest[j] == ')' && --depth == 0) break;
            }
            require(j < rest.size(), "unbalanced parentheses in disjoint spec");
            parts.push_back(parse_family_spec(rest.substr(i + 1, j - i - 1)));
            i = j + 1;
            if (i < rest.size()) {
                require(rest[i] == ',', "disjoint items must be comma separated");
                ++i;
                require(i < rest.size(), "trailing comma in disjoint spec");
            }
        }
        spec = FamilySpec::disjoint_union_of(std::move(parts));
    } else if (head == "edge-list") {
        require(!rest.empty(), "edge-list needs a file path");
        spec = FamilySpec::edge_list_file(rest);
    } else if (head == "g6" || head == "graph6") {
        require(!rest.empty(), "g6 needs a graph6 line");
        spec = FamilySpec::graph6(rest);
    } else {
        throw InputError("unknown family '" + head + "'");
    }
    spec.validate();
    return spec;
}

Graph build(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilySpec::Kind::Path: {
            Graph g(spec.params[0]);
            for (int i = 0; i + 1 < spec.params[0]; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case FamilySpec::Kind::Cycle: {
            Graph g(spec.params[0]);
            for (int i = 0; i < spec.params[0]; ++i) {
                g.add_edge(i, (i + 1) % spec.params[0]);
            }
            return g;
        }
        case FamilySpec::Kind::Complete: {
            Graph g(spec.params[0]);
            for (int u = 0; u < spec.params[0]; ++u) {
                for (int v = u + 1; v < spec.params[0]; ++v) g.add_edge(u, v);
            }
            return g;
        }
        case FamilySpec::Kind::Edgeless:
            return Graph(spec.params[0]);
        case FamilySpec::Kind::Multipartite:
            return build_multipartite(spec.params);
        case FamilySpec::Kind::Balanced:
            return build_multipartite(std::vector<int>(spec.params[1], spec.params[0]));
        case FamilySpec::Kind::Broom:
            return build_broom(spec.params[0], spec.params[1]);
        case FamilySpec::Kind::Comb:
            return corona(build(FamilySpec::path(spec.params[0])));
        case FamilySpec::Kind::Kneser2:
            return build_kneser2(spec.params[0]);
        case FamilySpec::Kind::TStar:
            return build_tstar(spec.params[0], spec.params[1]);
        case FamilySpec::Kind::Corona:
            return corona(build(spec.children[0]));
        case FamilySpec::Kind::DisjointUnion: {
            std::vector<Graph> gs;
            gs.reserve(spec.children.size());
            for (const auto& c : spec.children) gs.push_back(build(c));
            return disjoint_union(gs);
        }
        case FamilySpec::Kind::EdgeListFile:
            return parse_edge_list(read_file(spec.text));
        case FamilySpec::Kind::Graph6:
            return parse_graph6(spec.text);
    }
    throw InputError("unhandled family kind");
}

Graph corona(const Graph& g) {
    const int n = g.order();
    Graph h(2 * n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v) h.add_edge(u, v);
        }
    }
    for (int v = 0; v < n; ++v) {
        h.add_edge(v, n + v);
        std::string base = g.has_labels() && !g.label(v).empty()
                               ? g.label(v)
                               : "v" + std::to_string(v);
        h.set_label(v, base);
        h.set_label(n + v, base + "'");
    }
    return h;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    int n = 0;
    for (const auto& g : gs) n += g.order();
    Graph out(n);
    int offset = 0;
    for (const auto& g : gs) {
        for (int u = 0; u < g.order(); ++u) {
            for (int v : g.neighbors(u)) {
                if (u < v) out.add_edge(offset + u, offset + v);
            }
        }
        offset += g.order();
    }
    return out;
}

}  // namespace gpp
