#pragma once

#include <string>
#include <vector>

#include "gpp/graph.hpp"

namespace gpp {

// Declarative description of a graph to construct: a named family with
// integer parameters, an operator (corona, disjoint union) over child specs,
// or an external source (edge-list file, graph6 text).
struct FamilySpec {
    enum class Kind {
        Path,
        Cycle,
        Complete,
        Edgeless,
        Multipartite,
        Balanced,   // params = {r, t}: t parts of size r
        Broom,      // params = {s, r}: path u_0..u_s, r leaves at u_0
        Comb,       // params = {n}: P_n with a pendant leaf per path vertex
        Kneser2,    // params = {n}: 2-subsets of [n], adjacent iff disjoint
        TStar,      // params = {r, a}: part i, label j; i_j ~ k_l iff i!=k and j!=l
        Corona,     // children = {inner}
        DisjointUnion,
        EdgeListFile,  // text = path
        Graph6,        // text = one graph6 line
    };

    Kind kind;
    std::vector<int> params;
    std::vector<FamilySpec> children;
    std::string text;

    static FamilySpec path(int n) { return {Kind::Path, {n}, {}, {}}; }
    static FamilySpec cycle(int n) { return {Kind::Cycle, {n}, {}, {}}; }
    static FamilySpec complete(int n) { return {Kind::Complete, {n}, {}, {}}; }
    static FamilySpec edgeless(int n) { return {Kind::Edgeless, {n}, {}, {}}; }
    static FamilySpec multipartite(std::vector<int> parts) {
        return {Kind::Multipartite, std::move(parts), {}, {}};
    }
    static FamilySpec balanced(int r, int t) { return {Kind::Balanced, {r, t}, {}, {}}; }
    static FamilySpec broom(int s, int r) { return {Kind::Broom, {s, r}, {}, {}}; }
    static FamilySpec comb(int n) { return {Kind::Comb, {n}, {}, {}}; }
    static FamilySpec kneser2(int n) { return {Kind::Kneser2, {n}, {}, {}}; }
    static FamilySpec tstar(int r, int a) { return {Kind::TStar, {r, a}, {}, {}}; }
    static FamilySpec corona_of(FamilySpec inner) {
        return {Kind::Corona, {}, {std::move(inner)}, {}};
    }
    static FamilySpec disjoint_union_of(std::vector<FamilySpec> parts) {
        return {Kind::DisjointUnion, {}, std::move(parts), {}};
    }
    static FamilySpec edge_list_file(std::string path) {
        return {Kind::EdgeListFile, {}, {}, std::move(path)};
    }
    static FamilySpec graph6(std::string line) {
        return {Kind::Graph6, {}, {}, std::move(line)};
    }

    // Throws InputError naming the violated constraint.
    void validate() const;

    // Canonical colon form, e.g. "corona:cycle:6" or "multipartite:8,4".
    std::string name() const;
};

// Colon mini-language: "corona:cycle:6", "multipartite:8,4",
// "disjoint:(path:3),(complete:3)", "g6:D?{" or "edge-list:/path/file".
FamilySpec parse_family_spec(const std::string& text);

// Constructs the described graph. File-backed specs read from disk here.
Graph build(const FamilySpec& spec);

// G plus one new pendant leaf v' per vertex v (leaf of v gets id n+v).
Graph corona(const Graph& g);

// Vertex-relabelled union with no cross edges; empty list gives the
// empty graph.
Graph disjoint_union(const std::vector<Graph>& gs);

}  // namespace gpp
