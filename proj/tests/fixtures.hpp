#pragma once

#include <string>
#include <vector>

#include "theta3/seifert.hpp"

namespace fixtures {

using theta3::Int;
using theta3::PlumbingGraph;
using theta3::SeifertData;

inline SeifertData sd(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (long long x : xs) v.emplace_back(x);
    return SeifertData(std::move(v));
}

inline PlumbingGraph single_vertex(long long w) {
    PlumbingGraph g;
    g.add_vertex("a", w);
    return g;
}

inline PlumbingGraph chain(std::initializer_list<long long> weights) {
    PlumbingGraph g;
    int i = 0;
    std::string prev;
    for (long long w : weights) {
        std::string id = "v" + std::to_string(i++);
        g.add_vertex(id, w);
        if (!prev.empty()) g.add_edge(prev, id);
        prev = id;
    }
    return g;
}

// The E8 tree written out by hand (center n0 with arms of lengths 1, 2, 4),
// independent of canonical_plumbing.
inline PlumbingGraph e8_graph(long long weight = -2) {
    PlumbingGraph g;
    for (int i = 0; i < 8; ++i) g.add_vertex("n" + std::to_string(i), weight);
    g.add_edge("n0", "n1");
    g.add_edge("n0", "n2");
    g.add_edge("n2", "n3");
    g.add_edge("n0", "n4");
    g.add_edge("n4", "n5");
    g.add_edge("n5", "n6");
    g.add_edge("n6", "n7");
    return g;
}

inline PlumbingGraph hyperbolic_graph() {
    PlumbingGraph g;
    g.add_vertex("a", 0);
    g.add_vertex("b", 0);
    g.add_edge("a", "b");
    return g;
}

inline PlumbingGraph e8_plus_h_graph(int e8_copies, int h_copies, long long e8_weight = 2) {
    PlumbingGraph g;
    for (int c = 0; c < e8_copies; ++c) {
        std::string p = "e" + std::to_string(c) + "_";
        for (int i = 0; i < 8; ++i) g.add_vertex(p + std::to_string(i), e8_weight);
        g.add_edge(p + "0", p + "1");
        g.add_edge(p + "0", p + "2");
        g.add_edge(p + "2", p + "3");
        g.add_edge(p + "0", p + "4");
        g.add_edge(p + "4", p + "5");
        g.add_edge(p + "5", p + "6");
        g.add_edge(p + "6", p + "7");
    }
    for (int c = 0; c < h_copies; ++c) {
        std::string p = "h" + std::to_string(c) + "_";
        g.add_vertex(p + "0", 0);
        g.add_vertex(p + "1", 0);
        g.add_edge(p + "0", p + "1");
    }
    return g;
}

}  // namespace fixtures
