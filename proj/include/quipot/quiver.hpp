// Graded quivers and exact arithmetic in the graded path algebra.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quipot {

using Rational = mpq_class;

struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArrowSpec {
    std::string name;
    std::string source;
    std::string target;
    int degree = 0;
};

struct Arrow {
    std::string name;
    int source = -1;  // vertex index
    int target = -1;
    int degree = 0;
};

class GradedQuiver {
  public:
    GradedQuiver() = default;

    // Validates: unique names, declared endpoints, reserved-name rules
    // (no '*' in user names, no "t_<vertex>" for a declared vertex).
    static GradedQuiver make(const std::vector<std::string>& vertices,
                             const std::vector<ArrowSpec>& arrows);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int i) const { return arrows_.at(i); }
    int vertex_index(const std::string& name) const;  // -1 if absent
    int arrow_index(const std::string& name) const;   // -1 if absent

    // Used by extend_quiver, which must bypass the reserved-name checks.
    static GradedQuiver make_unchecked(std::vector<std::string> vertices,
                                       std::vector<Arrow> arrows);

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> arrow_lookup_;
};

// A path is a word of arrow indices read left-to-right, composed
// right-to-left: the rightmost arrow acts first, so in the word "bc" the
// arrow c is applied before b.  A length-0 path is the idempotent e_x at
// its base vertex; for nonempty words base is kept equal to the source
// vertex (the source of the rightmost arrow).
struct Path {
    int base = -1;
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    bool is_trivial() const { return word.empty(); }
    friend bool operator==(const Path&, const Path&) = default;
};

// Degree-lexicographic order: shorter words first, then lexicographic on
// arrow declaration indices, then base vertex (relevant for idempotents).
bool deglex_less(const Path& x, const Path& y);

struct PathLess {
    bool operator()(const Path& x, const Path& y) const { return deglex_less(x, y); }
};

Path trivial_path(const GradedQuiver& q, int vertex);
// Checks internal composability and fills in the base vertex.
std::optional<Path> make_path(const GradedQuiver& q, std::vector<int> word);

int source(const GradedQuiver& q, const Path& p);
int target(const GradedQuiver& q, const Path& p);
int degree(const GradedQuiver& q, const Path& p);

// Concatenation pq (p after q); empty when target(q) != source(p).
std::optional<Path> compose(const GradedQuiver& q, const Path& p, const Path& r);

// Finite rational-linear combination of parallel paths (shared source and
// target).  Zero coefficients are never stored; zero is the empty map.
class AlgElement {
  public:
    using TermMap = std::map<Path, Rational, PathLess>;

    AlgElement() = default;
    static AlgElement path_term(const GradedQuiver& q, const Path& p, const Rational& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Throws QuiverError when the new path is not parallel to existing terms.
    void add_term(const GradedQuiver& q, const Path& p, const Rational& c);

    std::optional<std::pair<int, int>> endpoints(const GradedQuiver& q) const;  // (source, target)
    std::optional<int> homogeneous_degree(const GradedQuiver& q) const;

    friend bool operator==(const AlgElement&, const AlgElement&) = default;
    friend AlgElement alg_scale(const Rational& r, const AlgElement& x);

  private:
    TermMap terms_;
};

AlgElement alg_add(const GradedQuiver& q, const AlgElement& x, const AlgElement& y);
AlgElement alg_scale(const Rational& r, const AlgElement& x);
AlgElement alg_mul(const GradedQuiver& q, const AlgElement& x, const AlgElement& y);

// All paths of length <= max_length in deglex order, optionally filtered by
// total degree.
std::vector<Path> enumerate_paths(const GradedQuiver& q, int max_length,
                                  std::optional<int> degree_filter = std::nullopt);

// Rendering: idempotents as "e_<vertex>", words as concatenated arrow names;
// elements as "t1 + t2 - t3" with coefficients "p/q " in front when != +-1.
std::string rat_str(const Rational& r);
std::string path_str(const GradedQuiver& q, const Path& p);
std::string elem_str(const GradedQuiver& q, const AlgElement& x);

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace quipot
