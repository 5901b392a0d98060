// Shared instances and deterministic random generators for the test suites.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quipot/dsl.hpp"
#include "quipot/ginzburg.hpp"
#include "quipot/jacobian.hpp"

namespace qptest {

inline std::string data_file(const std::string& name) {
    return std::string(QUIPOT_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// --- fixed instances ------------------------------------------------------

// Three-cycle with |a| = -1 at n = 4; the running worked example.
struct Example34 {
    quipot::GradedQuiver q;
    quipot::Potential w{4};
    quipot::DgPresentation pres;
};

inline Example34 example34() {
    using namespace quipot;
    Example34 ex;
    ex.q = GradedQuiver::make({"1", "2", "3"}, {{"a", "1", "2", -1},
                                                {"b", "3", "1", 0},
                                                {"c", "2", "3", 0}});
    ex.w = Potential(4);
    ex.w.add_term(ex.q, *make_path(ex.q, {0, 1, 2}), 1);  // the cycle abc
    ex.pres = make_ginzburg(ex.q, ex.w, 4);
    return ex;
}

// Commutative square: a:1->2, b:2->4, c:1->3, d:3->4, relation dc - ba.
inline quipot::GradedQuiver grid_quiver() {
    using namespace quipot;
    return GradedQuiver::make({"1", "2", "3", "4"}, {{"a", "1", "2", 0},
                                                     {"b", "2", "4", 0},
                                                     {"c", "1", "3", 0},
                                                     {"d", "3", "4", 0}});
}

inline quipot::AlgElement grid_relation(const quipot::GradedQuiver& q) {
    using namespace quipot;
    AlgElement r = AlgElement::path_term(q, *make_path(q, {3, 2}), 1);   // dc
    r.add_term(q, *make_path(q, {1, 0}), -1);                            // -ba
    return r;
}

// Linear A_3 with arrows i+1 -> i, all degrees 0.
inline quipot::GradedQuiver a3_quiver() {
    using namespace quipot;
    return GradedQuiver::make({"1", "2", "3"},
                              {{"p", "2", "1", 0}, {"q", "3", "2", 0}});
}

// One vertex, two degree-0 loops, W = xyxy at n = 3; H0 is infinite.
struct LoopsInstance {
    quipot::GradedQuiver q;
    quipot::Potential w{3};
    quipot::DgPresentation pres;
};

inline LoopsInstance loops_instance() {
    using namespace quipot;
    LoopsInstance li;
    li.q = GradedQuiver::make({"1"}, {{"x", "1", "1", 0}, {"y", "1", "1", 0}});
    li.w = Potential(3);
    li.w.add_term(li.q, *make_path(li.q, {0, 1, 0, 1}), 1);  // xyxy
    li.pres = make_ginzburg(li.q, li.w, 3);
    return li;
}

// --- deterministic randomness ----------------------------------------------
// std::mt19937 output is pinned by the standard; the distributions are not,
// so map raw draws by modulo instead.

inline int rnd_int(std::mt19937& g, int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<unsigned long>(hi - lo + 1));
}

inline quipot::Rational rnd_coeff(std::mt19937& g) {
    static const char* pool[] = {"1", "-1", "2", "-2", "1/2", "-1/2", "3", "-2/3"};
    quipot::Rational r(pool[rnd_int(g, 0, 7)]);
    r.canonicalize();
    return r;
}

// Acyclic graded quiver with arrow degrees in [-m, 0].
inline quipot::GradedQuiver random_acyclic_quiver(std::mt19937& g, int m, int max_v = 5,
                                                  int max_arrows = 6) {
    using namespace quipot;
    int V = rnd_int(g, 2, max_v);
    std::vector<std::string> verts;
    for (int i = 1; i <= V; ++i) verts.push_back("v" + std::to_string(i));
    int A = rnd_int(g, 1, max_arrows);
    std::vector<ArrowSpec> arrows;
    for (int i = 0; i < A; ++i) {
        int s = rnd_int(g, 1, V - 1);  // arrows go down the vertex order
        int t = rnd_int(g, 0, s - 1);
        arrows.push_back({"g" + std::to_string(i), verts[s], verts[t], -rnd_int(g, 0, m)});
    }
    return GradedQuiver::make(verts, arrows);
}

struct CyclicInstance {
    quipot::GradedQuiver q;
    std::vector<std::vector<int>> cycle_words;  // closed composable words
};

// A directed cycle of the requested length plus a few extra arrows; collects
// the seeded cycle and some random closed walks.
inline CyclicInstance random_cyclic_quiver(std::mt19937& g, int cycle_len, int extra_arrows,
                                           int min_degree = 0) {
    using namespace quipot;
    int V = cycle_len;
    std::vector<std::string> verts;
    for (int i = 0; i < V; ++i) verts.push_back("u" + std::to_string(i));
    std::vector<ArrowSpec> arrows;
    for (int i = 0; i < V; ++i)
        arrows.push_back({"c" + std::to_string(i), verts[i], verts[(i + 1) % V],
                          min_degree == 0 ? 0 : -rnd_int(g, 0, -min_degree)});
    for (int i = 0; i < extra_arrows; ++i)
        arrows.push_back({"x" + std::to_string(i), verts[rnd_int(g, 0, V - 1)],
                          verts[rnd_int(g, 0, V - 1)],
                          min_degree == 0 ? 0 : -rnd_int(g, 0, -min_degree)});
    CyclicInstance inst;
    inst.q = GradedQuiver::make(verts, arrows);

    std::vector<int> seeded;
    for (int i = V - 1; i >= 0; --i) seeded.push_back(i);  // word c_{V-1} ... c_0
    inst.cycle_words.push_back(seeded);

    // random closed walks up to length 4
    for (int tries = 0; tries < 12 && inst.cycle_words.size() < 4; ++tries) {
        int start = rnd_int(g, 0, V - 1);
        int cur = start;
        std::vector<int> rev;
        int len = rnd_int(g, 1, 4);
        for (int s = 0; s < len; ++s) {
            std::vector<int> outs;
            for (int a = 0; a < inst.q.arrow_count(); ++a)
                if (inst.q.arrow(a).source == cur) outs.push_back(a);
            if (outs.empty()) break;
            int a = outs[static_cast<size_t>(rnd_int(g, 0, static_cast<int>(outs.size()) - 1))];
            rev.push_back(a);
            cur = inst.q.arrow(a).target;
        }
        if (static_cast<int>(rev.size()) == len && cur == start && !rev.empty())
            inst.cycle_words.push_back({rev.rbegin(), rev.rend()});
    }
    return inst;
}

// Random path of length <= want starting at the given vertex (word grows on
// the left, so the start vertex is the path's source).
inline std::optional<quipot::Path> random_path_from(const quipot::GradedQuiver& q,
                                                    std::mt19937& g, int start, int want) {
    std::vector<int> rev;
    int cur = start;
    for (int s = 0; s < want; ++s) {
        std::vector<int> outs;
        for (int a = 0; a < q.arrow_count(); ++a)
            if (q.arrow(a).source == cur) outs.push_back(a);
        if (outs.empty()) break;
        int a = outs[static_cast<size_t>(rnd_int(g, 0, static_cast<int>(outs.size()) - 1))];
        rev.push_back(a);
        cur = q.arrow(a).target;
    }
    if (rev.empty()) return std::nullopt;
    return quipot::make_path(q, {rev.rbegin(), rev.rend()});
}

}  // namespace qptest
