#include "quipot/potential.hpp"

#include <algorithm>

namespace quipot {

static void require_cycle(const GradedQuiver& q, const Path& p) {
    if (p.is_trivial()) throw QuiverError("cyclic word must have length >= 1");
    if (source(q, p) != target(q, p)) throw QuiverError("path is not a cycle");
}

int rotation_sign(const GradedQuiver& q, const Path& cycle, int k) {
    require_cycle(q, cycle);
    int len = cycle.length();
    k = ((k % len) + len) % len;
    if (k == 0) return 1;
    int du = 0, dv = 0;
    for (int i = 0; i < len; ++i) {
        int d = q.arrow(cycle.word[i]).degree;
        (i < k ? du : dv) += d;
    }
    return parity_sign(static_cast<long>(du % 2) * (dv % 2));
}

static Path rotate(const GradedQuiver& q, const Path& cycle, int k) {
    int len = cycle.length();
    k = ((k % len) + len) % len;
    std::vector<int> w;
    w.reserve(len);
    for (int i = 0; i < len; ++i) w.push_back(cycle.word[(k + i) % len]);
    auto p = make_path(q, std::move(w));
    if (!p) throw QuiverError("internal: rotation of a cycle must compose");
    return *p;
}

CyclicNormalForm cyclic_normal_form(const GradedQuiver& q, const Path& cycle) {
    require_cycle(q, cycle);
    int len = cycle.length();
    int best = 0;
    for (int k = 1; k < len; ++k) {
        Path cand = rotate(q, cycle, k);
        if (cand.word < rotate(q, cycle, best).word) best = k;
    }
    CyclicNormalForm nf;
    nf.canonical = rotate(q, cycle, best);
    nf.sign = rotation_sign(q, cycle, best);
    // non-primitive words can reach the same minimal rotation with both
    // signs; such classes are 2-torsion, hence zero over the rationals
    for (int k = 0; k < len; ++k) {
        if (rotate(q, cycle, k).word == nf.canonical.word &&
            rotation_sign(q, cycle, k) != nf.sign) {
            nf.torsion_zero = true;
            break;
        }
    }
    return nf;
}

void Potential::add_term(const GradedQuiver& q, const Path& cycle, const Rational& coeff) {
    if (coeff == 0) return;
    CyclicNormalForm nf = cyclic_normal_form(q, cycle);
    if (nf.torsion_zero) return;
    auto [it, inserted] = terms_.emplace(nf.canonical, coeff * nf.sign);
    if (!inserted) {
        it->second += coeff * nf.sign;
        if (it->second == 0) terms_.erase(it);
    }
}

PotentialReport validate_potential(const GradedQuiver& q, const Potential& w) {
    PotentialReport rep;
    int want = 3 - w.ambient_n();
    for (const auto& [p, c] : w.terms()) {
        (void)c;
        if (p.is_trivial() || source(q, p) != target(q, p)) {
            rep.valid = false;
            rep.problems.push_back("term '" + path_str(q, p) + "' is not a cycle");
            continue;
        }
        int d = degree(q, p);
        if (d != want) {
            rep.valid = false;
            rep.problems.push_back("term '" + path_str(q, p) + "' has degree " +
                                   std::to_string(d) + ", expected " + std::to_string(want));
        }
    }
    int m = w.ambient_n() - 2;
    for (int i = 0; i < q.arrow_count(); ++i) {
        int d = q.arrow(i).degree;
        if (d < -m || d > 0) rep.arrow_degrees_in_window = false;
    }
    return rep;
}

AlgElement cyclic_derivative_term(const GradedQuiver& q, const Path& cycle,
                                  const Rational& coeff, int arrow) {
    require_cycle(q, cycle);
    AlgElement out;
    int len = cycle.length();
    int da = q.arrow(arrow).degree;
    for (int i = 0; i < len; ++i) {
        if (cycle.word[i] != arrow) continue;
        int du = 0, dv = 0;
        for (int j = 0; j < i; ++j) du += q.arrow(cycle.word[j]).degree;
        for (int j = i + 1; j < len; ++j) dv += q.arrow(cycle.word[j]).degree;
        int sgn = parity_sign(static_cast<long>(((du % 2) + 2) % 2) * ((((da + dv) % 2) + 2) % 2));
        std::vector<int> w;
        w.reserve(len - 1);
        for (int j = i + 1; j < len; ++j) w.push_back(cycle.word[j]);
        for (int j = 0; j < i; ++j) w.push_back(cycle.word[j]);
        Path vu;
        if (w.empty()) {
            vu = trivial_path(q, q.arrow(arrow).source);
        } else {
            auto p = make_path(q, std::move(w));
            if (!p) throw QuiverError("internal: cyclic derivative word must compose");
            vu = *p;
        }
        out.add_term(q, vu, coeff * sgn);
    }
    return out;
}

AlgElement cyclic_derivative(const GradedQuiver& q, const Potential& w, int arrow) {
    if (arrow < 0 || arrow >= q.arrow_count()) throw QuiverError("cyclic_derivative: unknown arrow");
    AlgElement out;
    for (const auto& [p, c] : w.terms())
        out = alg_add(q, out, cyclic_derivative_term(q, p, c, arrow));
    return out;
}

AlgElement cyclic_derivative(const GradedQuiver& q, const Potential& w,
                             const std::string& arrow_name) {
    int idx = q.arrow_index(arrow_name);
    if (idx < 0) throw QuiverError("cyclic_derivative: unknown arrow '" + arrow_name + "'");
    return cyclic_derivative(q, w, idx);
}

}  // namespace quipot
