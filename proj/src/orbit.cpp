#include "quipot/orbit.hpp"

namespace quipot {

static void validate(int n, const DbObject& x, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (x.lo < 1 || x.lo > x.hi || x.hi > n)
        throw std::invalid_argument(std::string(who) + ": bad interval " + db_str(x));
}

std::string db_str(const DbObject& x) {
    std::string s = "M[" + std::to_string(x.lo) + "," + std::to_string(x.hi) + "]";
    if (x.shift != 0) s += "[" + std::to_string(x.shift) + "]";
    return s;
}

int hom_dim_db(int n, const DbObject& x, const DbObject& y) {
    validate(n, x, "hom_dim_db");
    validate(n, y, "hom_dim_db");
    int delta = y.shift - x.shift;
    if (delta == 0)
        return (x.lo <= y.lo && y.lo <= x.hi && x.hi <= y.hi) ? 1 : 0;
    if (delta == 1)
        // Ext^1(M[x], M[y]) = dim Hom(M[y], tau M[x]); zero out of projectives
        return (y.lo <= x.lo - 1 && x.lo - 1 <= y.hi && y.hi <= x.hi - 1) ? 1 : 0;
    return 0;
}

DbObject apply_tau(int n, const DbObject& x) {
    validate(n, x, "apply_tau");
    if (x.lo >= 2) return DbObject{x.lo - 1, x.hi - 1, x.shift};
    return DbObject{x.hi, n, x.shift - 1};  // tau P_b = Sigma^{-1} I_b
}

DbObject apply_tau_inv(int n, const DbObject& x) {
    validate(n, x, "apply_tau_inv");
    if (x.hi <= n - 1) return DbObject{x.lo + 1, x.hi + 1, x.shift};
    return DbObject{1, x.lo, x.shift + 1};  // tau^{-1} I_a = Sigma P_a
}

DbObject apply_shift(const DbObject& x, int k) { return DbObject{x.lo, x.hi, x.shift + k}; }

DbObject apply_serre(int n, const DbObject& x) { return apply_tau(n, apply_shift(x, 1)); }

DbObject apply_serre_inv(int n, const DbObject& x) {
    return apply_shift(apply_tau_inv(n, x), -1);
}

DbObject apply_F(int n, int m, const DbObject& x, int k) {
    if (m < 1) throw std::invalid_argument("apply_F: m must be >= 1");
    DbObject z = x;
    for (; k > 0; --k) z = apply_tau_inv(n, apply_shift(z, m));
    for (; k < 0; ++k) z = apply_shift(apply_tau(n, z), -m);
    return z;
}

static bool in_domain(int m, const DbObject& x) {
    if (x.shift >= 0 && x.shift <= m - 1) return true;
    return x.shift == m && x.lo == 1;
}

OrbitObject canonical_orbit_rep(int n, int m, const DbObject& x) {
    validate(n, x, "canonical_orbit_rep");
    if (m < 1) throw std::invalid_argument("canonical_orbit_rep: m must be >= 1");
    DbObject z = x;
    int span = (x.shift < 0 ? -x.shift : x.shift) + m + 4;
    for (int guard = 0; !in_domain(m, z); ++guard) {
        if (guard > 2 * span)
            throw std::logic_error("canonical_orbit_rep: walk did not terminate");
        z = (z.shift < 0) ? apply_F(n, m, z, 1) : apply_F(n, m, z, -1);
    }
    return OrbitObject{z};
}

std::vector<OrbitObject> enumerate_orbit_objects(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_orbit_objects: need n, m >= 1");
    std::vector<OrbitObject> out;
    for (int s = 0; s < m; ++s)
        for (int lo = 1; lo <= n; ++lo)
            for (int hi = lo; hi <= n; ++hi) out.push_back(OrbitObject{DbObject{lo, hi, s}});
    for (int b = 1; b <= n; ++b) out.push_back(OrbitObject{DbObject{1, b, m}});
    return out;
}

int hom_dim_orbit(int n, int m, const DbObject& x, const DbObject& y) {
    if (m < 1) throw std::invalid_argument("hom_dim_orbit: m must be >= 1");
    int total = 0;
    // forward: F raises shifts by at least m each step, so once past
    // x.shift + 1 every further term vanishes
    for (DbObject z = y; z.shift <= x.shift + 1; z = apply_F(n, m, z, 1))
        total += hom_dim_db(n, x, z);
    // backward likewise below x.shift
    for (DbObject z = apply_F(n, m, y, -1); z.shift >= x.shift; z = apply_F(n, m, z, -1))
        total += hom_dim_db(n, x, z);
    return total;
}

int hom_dim_orbit(int n, int m, const OrbitObject& x, const OrbitObject& y) {
    return hom_dim_orbit(n, m, x.rep, y.rep);
}

CyReport check_cy(int n, int m, std::optional<int> exponent) {
    int e = exponent.value_or(m + 1);
    CyReport rep;
    auto objs = enumerate_orbit_objects(n, m);
    for (const auto& x : objs)
        for (const auto& y : objs) {
            ++rep.pairs;
            int lhs = hom_dim_orbit(n, m, x.rep, y.rep);
            int rhs = hom_dim_orbit(n, m, y.rep, apply_shift(x.rep, e));
            if (lhs != rhs) ++rep.violations;
        }
    return rep;
}

TiltingReport check_cluster_tilting(int n, int m) {
    if (n < 1) throw std::invalid_argument("check_cluster_tilting: n must be >= 1");
    if (m < 1) throw std::invalid_argument("check_cluster_tilting: m must be >= 1 (r-range empty)");
    TiltingReport rep;
    std::vector<DbObject> proj;
    for (int i = 1; i <= n; ++i) proj.push_back(DbObject{1, i, 0});

    for (int r = 1; r <= m; ++r)
        for (const auto& p : proj)
            for (const auto& q : proj)
                if (hom_dim_orbit(n, m, p, apply_shift(q, r)) != 0) rep.selfext_ok = false;

    auto objs = enumerate_orbit_objects(n, m);
    for (const auto& l : objs) {
        bool vanish = true;
        for (int r = 1; r <= m && vanish; ++r)
            for (const auto& p : proj)
                if (hom_dim_orbit(n, m, p, apply_shift(l.rep, r)) != 0) {
                    vanish = false;
                    break;
                }
        if (vanish) rep.add_t.push_back(l.rep);
    }
    rep.classification_ok = (rep.add_t == proj);

    rep.endo_expected = n * (n + 1) / 2;
    for (const auto& p : proj)
        for (const auto& q : proj) rep.endo_dim += hom_dim_orbit(n, m, p, q);
    rep.endo_ok = (rep.endo_dim == rep.endo_expected);

    for (int r = 1; r <= m - 1; ++r)
        for (const auto& p : proj)
            for (const auto& q : proj)
                if (hom_dim_orbit(n, m, p, apply_shift(q, -r)) != 0) rep.negative_shift_ok = false;

    return rep;
}

}  // namespace quipot
