#include "quipot/ginzburg.hpp"

namespace quipot {

GradedQuiver extend_quiver(const GradedQuiver& q, int n) {
    if (n < 3) throw QuiverError("extend_quiver: n must be >= 3 (scope is m = n-2 >= 1)");
    std::vector<std::string> vertices;
    for (int v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_name(v));
    std::vector<Arrow> arrows;
    for (int i = 0; i < q.arrow_count(); ++i) arrows.push_back(q.arrow(i));
    for (int i = 0; i < q.arrow_count(); ++i) {
        const Arrow& a = q.arrow(i);
        arrows.push_back(Arrow{a.name + "*", a.target, a.source, 2 - n - a.degree});
    }
    for (int v = 0; v < q.vertex_count(); ++v)
        arrows.push_back(Arrow{"t_" + q.vertex_name(v), v, v, 1 - n});
    return GradedQuiver::make_unchecked(std::move(vertices), std::move(arrows));
}

DgPresentation make_ginzburg(const GradedQuiver& q, const Potential& w, int n) {
    if (n < 3) throw QuiverError("make_ginzburg: n must be >= 3");
    if (w.ambient_n() != n) throw QuiverError("make_ginzburg: potential ambient n mismatch");
    PotentialReport rep = validate_potential(q, w);
    if (!rep.valid) {
        std::string msg = "make_ginzburg: invalid potential:";
        for (const auto& p : rep.problems) msg += " " + p + ";";
        msg.pop_back();
        throw QuiverError(msg);
    }

    DgPresentation pres;
    pres.base = q;
    pres.extended = extend_quiver(q, n);
    pres.n = n;
    pres.potential = w;

    const GradedQuiver& ext = pres.extended;
    int na = q.arrow_count();
    pres.d_gen.assign(ext.arrow_count(), AlgElement{});

    for (int i = 0; i < na; ++i) {
        // d vanishes on Q; d(a*) is the cyclic derivative, whose paths use
        // only original arrows and so are valid words of the extended quiver
        AlgElement da = cyclic_derivative(q, w, i);
        AlgElement lifted;
        for (const auto& [p, c] : da.terms()) lifted.add_term(ext, p, c);
        pres.d_gen[pres.dual_index(i)] = lifted;
    }

    int global = parity_sign(n);
    for (int x = 0; x < q.vertex_count(); ++x) {
        AlgElement dt;
        for (int v = 0; v < na; ++v) {
            const Arrow& a = q.arrow(v);
            int dual = pres.dual_index(v);
            // e_x [v, v*] e_x: the word vv* is a loop at target(v), and v*v a
            // loop at source(v); the supercommutator sign is (-1)^{|v||v*|}
            if (a.target == x) {
                auto p = make_path(ext, {v, dual});
                dt.add_term(ext, *p, Rational(global));
            }
            if (a.source == x) {
                auto p = make_path(ext, {dual, v});
                int sc = parity_sign(static_cast<long>(a.degree % 2) *
                                     (ext.arrow(dual).degree % 2));
                dt.add_term(ext, *p, Rational(-global * sc));
            }
        }
        pres.d_gen[pres.loop_index(x)] = dt;
    }
    return pres;
}

AlgElement apply_d(const DgPresentation& pres, const AlgElement& x) {
    const GradedQuiver& ext = pres.extended;
    AlgElement out;
    for (const auto& [p, c] : x.terms()) {
        int k = p.length();
        int suffix_deg = 0;  // degree of g_{i+1}..g_k, built right to left
        for (int i = k - 1; i >= 0; --i) {
            int g = p.word[i];
            const AlgElement& dg = pres.d_gen.at(g);
            if (!dg.is_zero()) {
                Path prefix, suffix;
                if (i == 0) {
                    prefix = trivial_path(ext, ext.arrow(g).target);
                } else {
                    std::vector<int> w(p.word.begin(), p.word.begin() + i);
                    prefix = *make_path(ext, std::move(w));
                }
                if (i == k - 1) {
                    suffix = trivial_path(ext, ext.arrow(g).source);
                } else {
                    std::vector<int> w(p.word.begin() + i + 1, p.word.end());
                    suffix = *make_path(ext, std::move(w));
                }
                AlgElement term = alg_mul(ext, AlgElement::path_term(ext, prefix),
                                          alg_mul(ext, dg, AlgElement::path_term(ext, suffix)));
                out = alg_add(ext, out, alg_scale(c * parity_sign(suffix_deg), term));
            }
            suffix_deg += ext.arrow(g).degree;
        }
    }
    return out;
}

DSquaredReport check_d_squared(const DgPresentation& pres) {
    DSquaredReport rep;
    for (int g = 0; g < pres.extended.arrow_count(); ++g) {
        AlgElement res = apply_d(pres, pres.d_gen[g]);
        if (!res.is_zero()) {
            rep.ok = false;
            rep.residues.emplace_back(pres.extended.arrow(g).name, res);
        }
    }
    return rep;
}

}  // namespace quipot
