#pragma once
// Small hand-built graphs shared by several test files.

#include "elnet/dimer.hpp"
#include "elnet/graph.hpp"

namespace fixture {

using elnet::DiskGraph;
using elnet::DiskGraphSpec;

// Center u joined to b1, b2, b3 by edges a, b, c.
inline DiskGraph star() {
    DiskGraphSpec s;
    s.n = 3;
    s.boundary = {"b1", "b2", "b3"};
    s.rotations = {{"b1", {"a"}}, {"b2", {"b"}}, {"b3", {"c"}}, {"u", {"a", "b", "c"}}};
    s.edges = {{"a", {"u", "b1"}}, {"b", {"u", "b2"}}, {"c", {"u", "b3"}}};
    return DiskGraph(s);
}

inline DiskGraph single_edge() {
    DiskGraphSpec s;
    s.n = 2;
    s.boundary = {"b1", "b2"};
    s.rotations = {{"b1", {"e"}}, {"b2", {"e"}}};
    s.edges = {{"e", {"b1", "b2"}}};
    return DiskGraph(s);
}

inline DiskGraph empty(int n) {
    DiskGraphSpec s;
    s.n = n;
    for (int i = 1; i <= n; ++i) {
        s.boundary.push_back("b" + std::to_string(i));
        s.rotations["b" + std::to_string(i)] = {};
    }
    return DiskGraph(s);
}

// Two parallel edges between b1 and b2; f is the one nearer the boundary arc b1 -> b2.
inline DiskGraph doubled_edge() {
    DiskGraphSpec s;
    s.n = 2;
    s.boundary = {"b1", "b2"};
    s.rotations = {{"b1", {"f", "g"}}, {"b2", {"g", "f"}}};
    s.edges = {{"f", {"b1", "b2"}}, {"g", {"b1", "b2"}}};
    return DiskGraph(s);
}

// Triangle on b1, b2, b3 with edges x = b2b3, y = b3b1, z = b1b2.
inline DiskGraph triangle() {
    DiskGraphSpec s;
    s.n = 3;
    s.boundary = {"b1", "b2", "b3"};
    s.rotations = {{"b1", {"z", "y"}}, {"b2", {"x", "z"}}, {"b3", {"y", "x"}}};
    s.edges = {{"x", {"b2", "b3"}}, {"y", {"b3", "b1"}}, {"z", {"b1", "b2"}}};
    return DiskGraph(s);
}

// Square v1 v2 v3 v4 (white, black, white, black, clockwise) with one leg per corner to the
// white boundary vertex d_i; the legs at the white corners pass through black m1 and m3.
inline elnet::BipartiteGraph square() {
    using elnet::Color;
    DiskGraphSpec s;
    s.n = 4;
    s.boundary = {"d1", "d2", "d3", "d4"};
    s.edges = {{"s12", {"v1", "v2"}}, {"s23", {"v2", "v3"}}, {"s34", {"v3", "v4"}}, {"s41", {"v4", "v1"}},
               {"l1", {"v1", "m1"}},  {"k1", {"m1", "d1"}},  {"l2", {"v2", "d2"}},  {"l3", {"v3", "m3"}},
               {"k3", {"m3", "d3"}},  {"l4", {"v4", "d4"}}};
    s.rotations = {{"v1", {"l1", "s12", "s41"}}, {"v2", {"l2", "s23", "s12"}}, {"v3", {"l3", "s34", "s23"}},
                   {"v4", {"l4", "s41", "s34"}}, {"m1", {"l1", "k1"}},         {"m3", {"l3", "k3"}},
                   {"d1", {"k1"}},               {"d2", {"l2"}},               {"d3", {"k3"}},
                   {"d4", {"l4"}}};
    std::map<std::string, Color> colors;
    for (const char* w : {"v1", "v3", "d1", "d2", "d3", "d4"}) colors[w] = Color::White;
    for (const char* b : {"v2", "v4", "m1", "m3"}) colors[b] = Color::Black;
    return elnet::make_bipartite(s, colors);
}

}  // namespace fixture
