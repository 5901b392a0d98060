#include "quipot/report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quipot/dsl.hpp"
#include "quipot/jacobian.hpp"
#include "quipot/orbit.hpp"

namespace quipot {

namespace {

using nlohmann::json;

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct FileOpts {
    std::string path;
    bool diagrammatic = false;
    long max_steps = 10000;
    long max_basis = 100000;
    std::string json_path;
};

struct LoadedInput {
    std::string raw;
    std::string sha;
    InputDocument doc;
    Elaborated elab;
};

LoadedInput load_input(const FileOpts& opt) {
    LoadedInput li;
    li.raw = slurp(opt.path);
    li.sha = sha256_hex(li.raw);
    li.doc = parse_document(li.raw, opt.diagrammatic);
    li.elab = elaborate(li.doc);
    return li;
}

json base_report(const std::string& command, const std::string& sha, const FileOpts& opt) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["input_sha256"] = sha;
    j["version"] = kVersion;
    j["bounds"] = {{"max_steps", opt.max_steps},
                   {"max_basis", opt.max_basis},
                   {"diagrammatic", opt.diagrammatic}};
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write JSON report to '" + path + "'");
    f << j.dump(2) << "\n";
}

struct CheckOutcome {
    PotentialReport potential;
    std::optional<DSquaredReport> d2;
    std::optional<DgPresentation> pres;

    bool passed() const { return potential.valid && d2 && d2->ok; }
};

CheckOutcome run_check(const Elaborated& e) {
    CheckOutcome out;
    out.potential = validate_potential(e.quiver, e.potential);
    if (out.potential.valid) {
        out.pres = make_ginzburg(e.quiver, e.potential, e.n);
        out.d2 = check_d_squared(*out.pres);
    }
    return out;
}

json check_verdicts(const CheckOutcome& c) {
    json v;
    v["potential_valid"] = c.potential.valid;
    v["potential_problems"] = c.potential.problems;
    v["arrow_degrees_in_window"] = c.potential.arrow_degrees_in_window;
    if (c.d2) {
        v["d_squared_zero"] = c.d2->ok;
        json res = json::object();
        for (const auto& [name, value] : c.d2->residues)
            res[name] = elem_str(c.pres->extended, value);
        v["residues"] = res;
    } else {
        v["d_squared_zero"] = nullptr;
        v["residues"] = json::object();
    }
    return v;
}

void print_check(std::ostream& out, const FileOpts& opt, const LoadedInput& li,
                 const CheckOutcome& c) {
    out << "input: " << opt.path << "\n";
    out << "n = " << li.elab.n << "\n";
    out << "base quiver: " << li.elab.quiver.vertex_count() << " vertices, "
        << li.elab.quiver.arrow_count() << " arrows\n";
    out << "potential terms: " << li.elab.potential.terms().size() << "\n";
    out << "potential valid: " << yn(c.potential.valid) << "\n";
    for (const auto& p : c.potential.problems) out << "  - " << p << "\n";
    out << "arrow degrees in [-(n-2), 0]: " << yn(c.potential.arrow_degrees_in_window) << "\n";
    if (c.d2) {
        out << "d^2 = 0: " << yn(c.d2->ok) << "\n";
        for (const auto& [name, value] : c.d2->residues)
            out << "  d^2(" << name << ") = " << elem_str(c.pres->extended, value) << "\n";
    } else {
        out << "d^2 = 0: skipped (invalid potential)\n";
    }
}

int do_check(const FileOpts& opt, std::ostream& out) {
    LoadedInput li = load_input(opt);
    CheckOutcome c = run_check(li.elab);
    print_check(out, opt, li, c);
    if (!opt.json_path.empty()) {
        json j = base_report("check", li.sha, opt);
        j["verdicts"] = check_verdicts(c);
        write_json_file(opt.json_path, j);
    }
    return c.passed() ? 0 : 1;
}

json gamma_verdicts(const DgPresentation& pres) {
    const GradedQuiver& q = pres.extended;
    json v;
    v["n"] = pres.n;
    json verts = json::array();
    for (int i = 0; i < q.vertex_count(); ++i) verts.push_back(q.vertex_name(i));
    v["vertices"] = verts;
    json arrows = json::array();
    json diff = json::object();
    for (int i = 0; i < q.arrow_count(); ++i) {
        const Arrow& a = q.arrow(i);
        arrows.push_back({{"name", a.name},
                          {"source", q.vertex_name(a.source)},
                          {"target", q.vertex_name(a.target)},
                          {"degree", a.degree}});
        diff[a.name] = elem_str(q, pres.d_gen.at(i));
    }
    v["arrows"] = arrows;
    v["differential"] = diff;
    return v;
}

int do_gamma(const FileOpts& opt, std::ostream& out, std::ostream& err) {
    LoadedInput li = load_input(opt);
    CheckOutcome c = run_check(li.elab);
    if (!c.potential.valid) {
        err << "invalid potential:\n";
        for (const auto& p : c.potential.problems) err << "  - " << p << "\n";
        return 1;
    }
    out << gamma_text(*c.pres);
    if (!opt.json_path.empty()) {
        json j = base_report("gamma", li.sha, opt);
        j["verdicts"] = gamma_verdicts(*c.pres);
        write_json_file(opt.json_path, j);
    }
    return c.passed() ? 0 : 1;
}

const char* verdict_name(H0Verdict v) {
    switch (v) {
        case H0Verdict::finite: return "finite";
        case H0Verdict::infinite: return "infinite";
        default: return "undetermined";
    }
}

json h0_verdicts(const GradedQuiver& q, const H0Result& res) {
    json v;
    v["verdict"] = verdict_name(res.verdict);
    json rels = json::array();
    for (const auto& r : res.relations) rels.push_back(elem_str(q, r));
    v["relations"] = rels;
    json rules = json::array();
    for (const auto& r : res.system.rules)
        rules.push_back({{"lead", path_str(q, r.lead)}, {"tail", elem_str(q, r.tail)}});
    v["rules"] = rules;
    v["completion_steps"] = res.system.steps_used;
    if (res.verdict == H0Verdict::finite) {
        v["dimension"] = res.dimension();
        json basis = json::array();
        for (const auto& p : res.basis) basis.push_back(path_str(q, p));
        v["basis"] = basis;
    } else {
        v["dimension"] = nullptr;
        v["basis"] = json::array();
    }
    v["witness"] = res.witness ? json(path_str(q, *res.witness)) : json(nullptr);
    v["completed_convention_caveat"] = res.completed_convention_caveat;
    v["note"] = res.note;
    return v;
}

void print_h0(std::ostream& out, const GradedQuiver& q, const H0Result& res) {
    out << "relations:";
    if (res.relations.empty()) out << " (none)";
    out << "\n";
    for (const auto& r : res.relations) out << "  " << elem_str(q, r) << "\n";
    out << "verdict: " << verdict_name(res.verdict) << "\n";
    if (res.verdict == H0Verdict::finite) {
        out << "dimension: " << res.dimension() << "\n";
        out << "basis:";
        for (const auto& p : res.basis) out << " " << path_str(q, p);
        out << "\n";
        out << "rewriting rules:";
        if (res.system.rules.empty()) out << " (none)";
        out << "\n";
        for (const auto& r : res.system.rules)
            out << "  " << path_str(q, r.lead) << " -> " << elem_str(q, r.tail) << "\n";
        if (res.dimension() <= 16) {
            out << "products of non-idempotent basis paths (nonzero):\n";
            int printed = 0;
            for (const auto& x : res.basis) {
                if (x.is_trivial()) continue;
                for (const auto& y : res.basis) {
                    if (y.is_trivial()) continue;
                    AlgElement prod = h0_multiply(res, x, y);
                    if (prod.is_zero()) continue;
                    out << "  " << path_str(q, x) << " * " << path_str(q, y) << " = "
                        << elem_str(q, prod) << "\n";
                    ++printed;
                }
            }
            if (printed == 0) out << "  (all zero)\n";
        }
    } else if (res.verdict == H0Verdict::infinite) {
        out << "witness cycle: " << path_str(q, *res.witness) << "\n";
        out << "every power of the witness is in normal form\n";
    } else {
        out << "reason: "
            << (res.system.status == CompletionStatus::bound_exceeded
                    ? "completion step budget exhausted"
                    : "irreducible path cap reached")
            << "\n";
    }
    if (res.completed_convention_caveat) out << "note: " << res.note << "\n";
}

int h0_exit(const H0Result& res) {
    switch (res.verdict) {
        case H0Verdict::finite: return 0;
        case H0Verdict::infinite: return 1;
        default: return 2;
    }
}

int do_h0(const FileOpts& opt, std::ostream& out, std::ostream& err) {
    LoadedInput li = load_input(opt);
    CheckOutcome c = run_check(li.elab);
    if (!c.potential.valid) {
        err << "invalid potential:\n";
        for (const auto& p : c.potential.problems) err << "  - " << p << "\n";
        return 1;
    }
    if (!c.potential.arrow_degrees_in_window) {
        err << "input error: arrow degrees outside [-(n-2), 0] are not supported here\n";
        return 3;
    }
    H0Result res = h0(*c.pres, opt.max_steps, opt.max_basis);
    print_h0(out, li.elab.quiver, res);
    if (!opt.json_path.empty()) {
        json j = base_report("h0", li.sha, opt);
        j["verdicts"] = h0_verdicts(li.elab.quiver, res);
        write_json_file(opt.json_path, j);
    }
    return h0_exit(res);
}

int do_report(const FileOpts& opt, std::ostream& out, std::ostream& err) {
    LoadedInput li = load_input(opt);
    CheckOutcome c = run_check(li.elab);
    print_check(out, opt, li, c);
    json j = base_report("report", li.sha, opt);
    json verdicts;
    verdicts["check"] = check_verdicts(c);
    int code;
    if (!c.passed() || !c.potential.arrow_degrees_in_window) {
        verdicts["h0"] = nullptr;
        if (!c.potential.arrow_degrees_in_window && c.passed())
            err << "input error: arrow degrees outside [-(n-2), 0] are not supported here\n";
        code = c.passed() ? 3 : 1;
    } else {
        H0Result res = h0(*c.pres, opt.max_steps, opt.max_basis);
        print_h0(out, li.elab.quiver, res);
        verdicts["h0"] = h0_verdicts(li.elab.quiver, res);
        code = h0_exit(res);
    }
    j["verdicts"] = verdicts;
    write_json_file(opt.json_path, j);
    return code;
}

struct OrbitOpts {
    std::string type = "A";
    int n = 1;
    int m = 1;
    std::optional<int> cy_exponent;
    std::string json_path;
};

int do_orbit(const OrbitOpts& opt, std::ostream& out, std::ostream& err) {
    if (opt.type != "A") {
        err << "input error: only type A is supported\n";
        return 3;
    }
    if (opt.n < 1 || opt.m < 1) {
        err << "input error: n and m must be positive\n";
        return 3;
    }
    auto objs = enumerate_orbit_objects(opt.n, opt.m);
    int exponent = opt.cy_exponent ? *opt.cy_exponent : opt.m + 1;
    CyReport cy = check_cy(opt.n, opt.m, exponent);
    TiltingReport tilting = check_cluster_tilting(opt.n, opt.m);

    out << "orbit category: type A, n = " << opt.n << ", m = " << opt.m << "\n";
    out << "fundamental domain: " << objs.size() << " objects\n";
    out << "shift-" << exponent << " duality: " << cy.pairs << " pairs, " << cy.violations
        << " violations\n";
    out << "tilting object T (projectives at shift 0):\n";
    out << "  self-extensions vanish (r = 1.." << opt.m << "): " << yn(tilting.selfext_ok)
        << "\n";
    out << "  summands recovered from extension vanishing: " << yn(tilting.classification_ok)
        << "\n";
    out << "  endomorphism dimension: " << tilting.endo_dim << " (expected "
        << tilting.endo_expected << ")\n";
    if (opt.m > 1)
        out << "  negative-shift vanishing (r = 1.." << opt.m - 1
            << "): " << yn(tilting.negative_shift_ok) << "\n";

    if (!opt.json_path.empty()) {
        std::string params = "orbit type=" + opt.type + " n=" + std::to_string(opt.n) +
                             " m=" + std::to_string(opt.m);
        json j;
        j["schema"] = 1;
        j["command"] = "orbit";
        j["input_sha256"] = sha256_hex(params);
        j["version"] = kVersion;
        j["bounds"] = {{"max_steps", 0}, {"max_basis", 0}, {"diagrammatic", false}};
        json v;
        v["domain_size"] = static_cast<long>(objs.size());
        v["cy"] = {{"exponent", exponent}, {"pairs", cy.pairs}, {"violations", cy.violations}};
        v["tilting"] = {{"selfext_ok", tilting.selfext_ok},
                        {"classification_ok", tilting.classification_ok},
                        {"endo_dim", tilting.endo_dim},
                        {"endo_expected", tilting.endo_expected},
                        {"endo_ok", tilting.endo_ok},
                        {"negative_shift_ok", tilting.negative_shift_ok},
                        {"summand_count", opt.n}};
        j["verdicts"] = v;
        write_json_file(opt.json_path, j);
    }
    return (cy.ok() && tilting.ok()) ? 0 : 1;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, md, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("SHA-256 computation failed");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

std::string gamma_text(const DgPresentation& pres) {
    std::ostringstream o;
    const GradedQuiver& q = pres.extended;
    o << "n = " << pres.n << "\n";
    o << "vertices:";
    for (int v = 0; v < q.vertex_count(); ++v) o << " " << q.vertex_name(v);
    o << "\n";
    o << "arrows:\n";
    for (int i = 0; i < q.arrow_count(); ++i) {
        const Arrow& a = q.arrow(i);
        o << "  " << a.name << " : " << q.vertex_name(a.source) << " -> "
          << q.vertex_name(a.target) << "\n";
    }
    o << "degrees:\n";
    for (int i = 0; i < q.arrow_count(); ++i)
        o << "|" << q.arrow(i).name << "| = " << q.arrow(i).degree << "\n";
    o << "differential:\n";
    for (int i = 0; i < q.arrow_count(); ++i)
        o << "d(" << q.arrow(i).name << ") = " << elem_str(q, pres.d_gen.at(i)) << "\n";
    return o.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graded quivers with superpotential: extended dg presentation, "
                 "zeroth homology, orbit-category cross-checks"};
    app.name("quipot");
    app.require_subcommand(1);

    FileOpts fo;
    OrbitOpts oo;

    auto add_file_opts = [&](CLI::App* sub, bool with_bounds, bool json_required) {
        sub->add_option("input", fo.path, "input file")->required();
        sub->add_flag("--diagrammatic", fo.diagrammatic,
                      "read potential words in diagrammatic (left-to-right) order");
        if (with_bounds) {
            sub->add_option("--max-steps", fo.max_steps, "completion step budget");
            sub->add_option("--max-basis", fo.max_basis, "irreducible path cap");
        }
        auto* jopt = sub->add_option("--json", fo.json_path, "write a JSON report here");
        if (json_required) jopt->required();
    };

    CLI::App* c_check = app.add_subcommand("check", "validate the potential and verify d^2 = 0");
    add_file_opts(c_check, false, false);
    CLI::App* c_gamma =
        app.add_subcommand("gamma", "print the extended presentation and its differential");
    add_file_opts(c_gamma, false, false);
    CLI::App* c_h0 = app.add_subcommand("h0", "compute the degree-zero homology algebra");
    add_file_opts(c_h0, true, false);
    CLI::App* c_report = app.add_subcommand("report", "check + h0 as one JSON document");
    add_file_opts(c_report, true, true);

    CLI::App* c_orbit = app.add_subcommand("orbit", "orbit-category checks for linear type A");
    c_orbit->add_option("--type", oo.type, "Dynkin type (only A)");
    c_orbit->add_option("--n", oo.n, "number of vertices")->required();
    c_orbit->add_option("--m", oo.m, "orbit parameter m >= 1")->required();
    int cy_exp = 0;
    CLI::Option* cy_opt =
        c_orbit->add_option("--cy-exponent", cy_exp, "override the duality shift exponent");
    c_orbit->add_option("--json", oo.json_path, "write a JSON report here");

    std::vector<const char*> argv;
    argv.push_back("quipot");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 3;
    }
    if (cy_opt->count() > 0) oo.cy_exponent = cy_exp;

    try {
        if (c_check->parsed()) return do_check(fo, out);
        if (c_gamma->parsed()) return do_gamma(fo, out, err);
        if (c_h0->parsed()) return do_h0(fo, out, err);
        if (c_report->parsed()) return do_report(fo, out, err);
        if (c_orbit->parsed()) return do_orbit(oo, out, err);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const QuiverError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace quipot
