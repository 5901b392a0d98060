// Superpotentials: signed cyclic words of total degree 3-n and the cyclic
// derivative with Koszul signs.
#pragma once

#include "quipot/quiver.hpp"

namespace quipot {

// Koszul sign picked up when rotating the first k letters of a cycle to the
// back: w = uv with |u| = k becomes vu at the cost of (-1)^{deg u * deg v}.
int rotation_sign(const GradedQuiver& q, const Path& cycle, int k);

struct CyclicNormalForm {
    Path canonical;     // lexicographically least rotation
    int sign = 1;       // input = sign * canonical as signed cyclic words
    bool torsion_zero = false;  // the class equals minus itself (so 0 over Q)
};

// Throws QuiverError unless the path is a cycle of length >= 1.
CyclicNormalForm cyclic_normal_form(const GradedQuiver& q, const Path& cycle);

class Potential {
  public:
    explicit Potential(int n) : n_(n) {}

    int ambient_n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Path, Rational, PathLess>& terms() const { return terms_; }

    // Canonicalizes, merges with the stored coefficient, drops exact zeros
    // and 2-torsion classes.  Throws QuiverError on non-cycle input.
    void add_term(const GradedQuiver& q, const Path& cycle, const Rational& coeff);

  private:
    int n_;
    std::map<Path, Rational, PathLess> terms_;
};

struct PotentialReport {
    bool valid = true;
    std::vector<std::string> problems;        // offending terms with reasons
    bool arrow_degrees_in_window = true;      // all |a| in [-(n-2), 0]
};

// Confirms every stored term is a cycle of total degree 3-n and reports
// whether all quiver arrow degrees lie in [-m, 0] with m = n-2 (the scope
// hypothesis for the homology computation).
PotentialReport validate_potential(const GradedQuiver& q, const Potential& w);

// Derivative of a single signed cycle: sum over factorizations p = uav of
// (-1)^{deg u * (deg a + deg v)} coeff * vu.
AlgElement cyclic_derivative_term(const GradedQuiver& q, const Path& cycle,
                                  const Rational& coeff, int arrow);

// Derivative of the whole potential with respect to one arrow.
AlgElement cyclic_derivative(const GradedQuiver& q, const Potential& w, int arrow);
AlgElement cyclic_derivative(const GradedQuiver& q, const Potential& w,
                             const std::string& arrow_name);

}  // namespace quipot
