// The extended quiver of a quiver with superpotential, the differential on
// generators, its derivation extension, and the d^2 = 0 check.
#pragma once

#include "quipot/potential.hpp"
#include "quipot/quiver.hpp"

namespace quipot {

// Adds, for each arrow a: x->y, a dual a*: y->x of degree 2-n-|a|, and for
// each vertex x a loop t_x of degree 1-n.  Original arrows keep their
// indices; duals follow in arrow order, then loops in vertex order.
// Requires n >= 3.
GradedQuiver extend_quiver(const GradedQuiver& q, int n);

struct DgPresentation {
    GradedQuiver base;
    GradedQuiver extended;
    int n = 0;
    Potential potential{3};
    // Differential value for every generator, indexed by extended arrow index.
    std::vector<AlgElement> d_gen;

    int dual_index(int base_arrow) const { return base.arrow_count() + base_arrow; }
    int loop_index(int vertex) const { return 2 * base.arrow_count() + vertex; }
};

// Builds the presentation and materializes d on each generator:
//   d(a) = 0,   d(a*) = cyclic derivative of W by a,
//   d(t_x) = (-1)^n e_x ( sum_v [v, v*] ) e_x.
// Throws QuiverError when n < 3, when the potential fails validation, or on
// an ambient-n mismatch.
DgPresentation make_ginzburg(const GradedQuiver& q, const Potential& w, int n);

// Extends d to products by the graded Leibniz rule written on the right:
// d(xy) = x d(y) + (-1)^{|y|} d(x) y, so on a word g_1...g_k the term
// differentiating g_i carries the sign of the degrees to its right.
AlgElement apply_d(const DgPresentation& pres, const AlgElement& x);

struct DSquaredReport {
    bool ok = true;
    // generator name -> nonzero residue d(d(g))
    std::vector<std::pair<std::string, AlgElement>> residues;
};

DSquaredReport check_d_squared(const DgPresentation& pres);

}  // namespace quipot
