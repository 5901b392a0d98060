#include "quipot/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quipot {

static bool reserved_user_name(const std::string& name, const std::set<std::string>& vertices) {
    if (name.find('*') != std::string::npos) return true;
    if (name.rfind("t_", 0) == 0 && vertices.count(name.substr(2))) return true;
    return false;
}

GradedQuiver GradedQuiver::make(const std::vector<std::string>& vertices,
                                const std::vector<ArrowSpec>& arrows) {
    std::vector<std::string> problems;
    std::set<std::string> vset(vertices.begin(), vertices.end());

    GradedQuiver q;
    for (const auto& v : vertices) {
        if (v.empty()) problems.push_back("empty vertex name");
        if (q.vertex_lookup_.count(v)) problems.push_back("duplicate vertex name '" + v + "'");
        if (reserved_user_name(v, vset)) problems.push_back("reserved vertex name '" + v + "'");
        q.vertex_lookup_.emplace(v, static_cast<int>(q.vertices_.size()));
        q.vertices_.push_back(v);
    }
    for (const auto& a : arrows) {
        if (a.name.empty()) problems.push_back("empty arrow name");
        if (q.arrow_lookup_.count(a.name)) problems.push_back("duplicate arrow name '" + a.name + "'");
        if (q.vertex_lookup_.count(a.name)) problems.push_back("arrow name '" + a.name + "' collides with a vertex");
        if (reserved_user_name(a.name, vset)) problems.push_back("reserved arrow name '" + a.name + "'");
        Arrow arr;
        arr.name = a.name;
        arr.degree = a.degree;
        auto s = q.vertex_lookup_.find(a.source);
        auto t = q.vertex_lookup_.find(a.target);
        if (s == q.vertex_lookup_.end()) {
            problems.push_back("arrow '" + a.name + "' has undeclared source '" + a.source + "'");
        } else {
            arr.source = s->second;
        }
        if (t == q.vertex_lookup_.end()) {
            problems.push_back("arrow '" + a.name + "' has undeclared target '" + a.target + "'");
        } else {
            arr.target = t->second;
        }
        q.arrow_lookup_.emplace(arr.name, static_cast<int>(q.arrows_.size()));
        q.arrows_.push_back(std::move(arr));
    }
    if (!problems.empty()) {
        std::string msg = "invalid quiver:";
        for (const auto& p : problems) msg += " " + p + ";";
        msg.pop_back();
        throw QuiverError(msg);
    }
    return q;
}

GradedQuiver GradedQuiver::make_unchecked(std::vector<std::string> vertices,
                                          std::vector<Arrow> arrows) {
    GradedQuiver q;
    q.vertices_ = std::move(vertices);
    q.arrows_ = std::move(arrows);
    for (int i = 0; i < q.vertex_count(); ++i) q.vertex_lookup_.emplace(q.vertices_[i], i);
    for (int i = 0; i < q.arrow_count(); ++i) q.arrow_lookup_.emplace(q.arrows_[i].name, i);
    if (q.vertex_lookup_.size() != q.vertices_.size() ||
        q.arrow_lookup_.size() != q.arrows_.size())
        throw QuiverError("internal: name collision in extended quiver");
    return q;
}

int GradedQuiver::vertex_index(const std::string& name) const {
    auto it = vertex_lookup_.find(name);
    return it == vertex_lookup_.end() ? -1 : it->second;
}

int GradedQuiver::arrow_index(const std::string& name) const {
    auto it = arrow_lookup_.find(name);
    return it == arrow_lookup_.end() ? -1 : it->second;
}

bool deglex_less(const Path& x, const Path& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.word != y.word) return x.word < y.word;
    return x.base < y.base;
}

Path trivial_path(const GradedQuiver& q, int vertex) {
    if (vertex < 0 || vertex >= q.vertex_count()) throw QuiverError("trivial_path: bad vertex");
    return Path{vertex, {}};
}

std::optional<Path> make_path(const GradedQuiver& q, std::vector<int> word) {
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (q.arrow(word[i]).source != q.arrow(word[i + 1]).target) return std::nullopt;
    if (word.empty()) return std::nullopt;  // base vertex unknown; use trivial_path
    int base = q.arrow(word.back()).source;
    return Path{base, std::move(word)};
}

int source(const GradedQuiver& q, const Path& p) {
    return p.is_trivial() ? p.base : q.arrow(p.word.back()).source;
}

int target(const GradedQuiver& q, const Path& p) {
    return p.is_trivial() ? p.base : q.arrow(p.word.front()).target;
}

int degree(const GradedQuiver& q, const Path& p) {
    int d = 0;
    for (int a : p.word) d += q.arrow(a).degree;
    return d;
}

std::optional<Path> compose(const GradedQuiver& q, const Path& p, const Path& r) {
    if (target(q, r) != source(q, p)) return std::nullopt;
    if (p.is_trivial()) return r;
    if (r.is_trivial()) return p;
    Path out;
    out.word = p.word;
    out.word.insert(out.word.end(), r.word.begin(), r.word.end());
    out.base = r.base;
    return out;
}

AlgElement AlgElement::path_term(const GradedQuiver& q, const Path& p, const Rational& c) {
    AlgElement x;
    x.add_term(q, p, c);
    return x;
}

void AlgElement::add_term(const GradedQuiver& q, const Path& p, const Rational& c) {
    if (c == 0) return;
    if (!terms_.empty()) {
        const Path& ref = terms_.begin()->first;
        if (source(q, ref) != source(q, p) || target(q, ref) != target(q, p))
            throw QuiverError("non-parallel term added to algebra element");
    }
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<std::pair<int, int>> AlgElement::endpoints(const GradedQuiver& q) const {
    if (terms_.empty()) return std::nullopt;
    const Path& p = terms_.begin()->first;
    return std::make_pair(source(q, p), target(q, p));
}

std::optional<int> AlgElement::homogeneous_degree(const GradedQuiver& q) const {
    std::optional<int> d;
    for (const auto& [p, c] : terms_) {
        int pd = degree(q, p);
        if (d && *d != pd) return std::nullopt;
        d = pd;
    }
    return d;
}

AlgElement alg_add(const GradedQuiver& q, const AlgElement& x, const AlgElement& y) {
    AlgElement out = x;
    for (const auto& [p, c] : y.terms()) out.add_term(q, p, c);
    return out;
}

AlgElement alg_scale(const Rational& r, const AlgElement& x) {
    AlgElement out;
    if (r == 0) return out;
    for (const auto& [p, c] : x.terms()) out.terms_.emplace(p, r * c);
    return out;
}

AlgElement alg_mul(const GradedQuiver& q, const AlgElement& x, const AlgElement& y) {
    AlgElement out;
    for (const auto& [p, cp] : x.terms())
        for (const auto& [r, cr] : y.terms())
            if (auto pr = compose(q, p, r)) out.add_term(q, *pr, cp * cr);
    return out;
}

std::vector<Path> enumerate_paths(const GradedQuiver& q, int max_length,
                                  std::optional<int> degree_filter) {
    std::vector<std::vector<Path>> by_length;
    std::vector<Path> level0;
    for (int v = 0; v < q.vertex_count(); ++v) level0.push_back(trivial_path(q, v));
    by_length.push_back(level0);
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Path> level;
        // prepend each arrow (the leftmost, last-applied letter) so the level
        // comes out lexicographically sorted
        for (int a = 0; a < q.arrow_count(); ++a) {
            for (const Path& w : by_length[len - 1]) {
                if (target(q, w) != q.arrow(a).source) continue;
                Path ext;
                ext.word.reserve(len);
                ext.word.push_back(a);
                ext.word.insert(ext.word.end(), w.word.begin(), w.word.end());
                ext.base = w.base;  // source is unchanged by prepending
                level.push_back(std::move(ext));
            }
        }
        if (level.empty()) break;
        by_length.push_back(std::move(level));
    }
    std::vector<Path> out;
    for (const auto& level : by_length)
        for (const Path& p : level)
            if (!degree_filter || degree(q, p) == *degree_filter) out.push_back(p);
    return out;
}

std::string rat_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();  // mpq_class(4, 2) and friends arrive unreduced
    return c.get_str();
}

std::string path_str(const GradedQuiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertex_name(p.base);
    std::string s;
    for (int a : p.word) s += q.arrow(a).name;
    return s;
}

std::string elem_str(const GradedQuiver& q, const AlgElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : x.terms()) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1) os << rat_str(abs) << " ";
        os << path_str(q, p);
        first = false;
    }
    return os.str();
}

}  // namespace quipot
