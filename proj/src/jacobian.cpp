#include "quipot/jacobian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace quipot {

namespace {

struct Reduction {
    int rule = -1;
    int pos = -1;  // -1: vertex-killer hit, whole path dies
};

bool word_occurs_at(const std::vector<int>& word, const std::vector<int>& lead, size_t pos) {
    if (pos + lead.size() > word.size()) return false;
    return std::equal(lead.begin(), lead.end(), word.begin() + pos);
}

std::optional<Reduction> find_reduction(const RewritingSystem& sys, const Path& p) {
    // killers first: any visited vertex equal to a trivial lead
    for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r) {
        const Path& lead = sys.rules[r].lead;
        if (!lead.is_trivial()) break;  // rules sorted, killers lead
        int x = lead.base;
        if (source(sys.quiver, p) == x || target(sys.quiver, p) == x) return Reduction{r, -1};
        for (int a : p.word)
            if (sys.quiver.arrow(a).source == x || sys.quiver.arrow(a).target == x)
                return Reduction{r, -1};
    }
    for (size_t pos = 0; pos < p.word.size(); ++pos)
        for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r) {
            const Path& lead = sys.rules[r].lead;
            if (lead.is_trivial()) continue;
            if (word_occurs_at(p.word, lead.word, pos))
                return Reduction{r, static_cast<int>(pos)};
        }
    return std::nullopt;
}

// p = prefix . lead . suffix with lead at pos; returns c * prefix*tail*suffix
AlgElement rewrite_once(const RewritingSystem& sys, const Path& p, const Rational& c,
                        const Reduction& red) {
    const GradedQuiver& q = sys.quiver;
    if (red.pos < 0) return AlgElement{};  // killed
    const RewriteRule& rule = sys.rules[red.rule];
    size_t pos = static_cast<size_t>(red.pos), len = rule.lead.word.size();
    Path prefix, suffix;
    if (pos == 0) {
        prefix = trivial_path(q, target(q, rule.lead));
    } else {
        prefix = *make_path(q, std::vector<int>(p.word.begin(), p.word.begin() + pos));
    }
    if (pos + len == p.word.size()) {
        suffix = trivial_path(q, source(q, rule.lead));
    } else {
        suffix = *make_path(q, std::vector<int>(p.word.begin() + pos + len, p.word.end()));
    }
    AlgElement out = alg_mul(q, AlgElement::path_term(q, prefix),
                             alg_mul(q, rule.tail, AlgElement::path_term(q, suffix)));
    return alg_scale(c, out);
}

std::optional<RewriteRule> orient(const GradedQuiver& q, const AlgElement& e) {
    if (e.is_zero()) return std::nullopt;
    auto lead_it = std::prev(e.terms().end());
    RewriteRule rule;
    rule.lead = lead_it->first;
    Rational inv = -1 / lead_it->second;
    for (const auto& [p, c] : e.terms())
        if (!(p == rule.lead)) rule.tail.add_term(q, p, c * inv);
    return rule;
}

AlgElement rule_as_element(const GradedQuiver& q, const RewriteRule& rule) {
    AlgElement e = alg_scale(-1, rule.tail);
    e.add_term(q, rule.lead, 1);
    return e;
}

// proper overlaps: suffix of a of length ov == prefix of b; S-element of the
// superword a . b[ov..]
std::vector<AlgElement> overlap_elements(const RewritingSystem& sys, const RewriteRule& a,
                                         const RewriteRule& b) {
    std::vector<AlgElement> out;
    const GradedQuiver& q = sys.quiver;
    if (a.lead.is_trivial() || b.lead.is_trivial()) return out;
    size_t la = a.lead.word.size(), lb = b.lead.word.size();
    for (size_t ov = 1; ov < std::min(la, lb); ++ov) {
        if (!std::equal(b.lead.word.begin(), b.lead.word.begin() + ov,
                        a.lead.word.begin() + (la - ov)))
            continue;
        Path alpha = *make_path(q, std::vector<int>(a.lead.word.begin(),
                                                    a.lead.word.begin() + (la - ov)));
        Path gamma = *make_path(q, std::vector<int>(b.lead.word.begin() + ov,
                                                    b.lead.word.end()));
        AlgElement left = alg_mul(q, a.tail, AlgElement::path_term(q, gamma));
        AlgElement right = alg_mul(q, AlgElement::path_term(q, alpha), b.tail);
        AlgElement s = alg_add(q, left, alg_scale(-1, right));
        out.push_back(std::move(s));
    }
    return out;
}

bool lead_head_reducible_by(const GradedQuiver& q, const RewriteRule& victim,
                            const RewriteRule& by) {
    if (by.lead.is_trivial()) {
        int x = by.lead.base;
        if (source(q, victim.lead) == x || target(q, victim.lead) == x) return true;
        for (int a : victim.lead.word)
            if (q.arrow(a).source == x || q.arrow(a).target == x) return true;
        return false;
    }
    if (victim.lead.word.size() < by.lead.word.size()) return false;
    for (size_t pos = 0; pos + by.lead.word.size() <= victim.lead.word.size(); ++pos)
        if (word_occurs_at(victim.lead.word, by.lead.word, pos)) return true;
    return false;
}

}  // namespace

bool RewritingSystem::path_reducible(const Path& p) const {
    return find_reduction(*this, p).has_value();
}

AlgElement RewritingSystem::reduce(const AlgElement& x) const {
    AlgElement::TermMap work(x.terms().begin(), x.terms().end());
    AlgElement out;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Path p = it->first;
        Rational c = it->second;
        work.erase(it);
        if (c == 0) continue;
        auto red = find_reduction(*this, p);
        if (!red) {
            out.add_term(quiver, p, c);
            continue;
        }
        AlgElement repl = rewrite_once(*this, p, c, *red);
        for (const auto& [rp, rc] : repl.terms()) {
            auto [wit, ins] = work.emplace(rp, rc);
            if (!ins) wit->second += rc;
        }
    }
    return out;
}

RewritingSystem complete_rewriting(const GradedQuiver& q,
                                   const std::vector<AlgElement>& relations, long max_steps) {
    RewritingSystem sys;
    sys.quiver = q;
    std::deque<AlgElement> agenda(relations.begin(), relations.end());
    long steps = 0;
    while (!agenda.empty()) {
        if (steps >= max_steps) {
            sys.status = CompletionStatus::bound_exceeded;
            break;
        }
        ++steps;
        AlgElement e = agenda.front();
        agenda.pop_front();
        AlgElement r = sys.reduce(e);
        auto rule = orient(q, r);
        if (!rule) continue;

        // interreduce: pull out rules whose lead the new rule rewrites
        std::vector<RewriteRule> kept;
        for (auto& old : sys.rules) {
            if (lead_head_reducible_by(q, old, *rule))
                agenda.push_back(rule_as_element(q, old));
            else
                kept.push_back(std::move(old));
        }
        sys.rules = std::move(kept);
        auto at = std::upper_bound(sys.rules.begin(), sys.rules.end(), *rule,
                                   [](const RewriteRule& a, const RewriteRule& b) {
                                       return deglex_less(a.lead, b.lead);
                                   });
        sys.rules.insert(at, *rule);
        for (auto& ru : sys.rules) ru.tail = sys.reduce(ru.tail);

        for (const auto& other : sys.rules) {
            for (auto& s : overlap_elements(sys, *rule, other)) agenda.push_back(std::move(s));
            if (!(other.lead == rule->lead))
                for (auto& s : overlap_elements(sys, other, *rule)) agenda.push_back(std::move(s));
        }
    }
    sys.steps_used = steps;
    return sys;
}

bool verify_confluence(const RewritingSystem& sys) {
    if (sys.status != CompletionStatus::complete) return false;
    const auto& rules = sys.rules;
    for (size_t i = 0; i < rules.size(); ++i) {
        if (!(sys.reduce(rules[i].tail) == rules[i].tail)) return false;  // tails in normal form
        for (size_t j = 0; j < rules.size(); ++j) {
            if (i != j && lead_head_reducible_by(sys.quiver, rules[i], rules[j]))
                return false;  // not interreduced
            for (const auto& s : overlap_elements(sys, rules[i], rules[j]))
                if (!sys.reduce(s).is_zero()) return false;
        }
    }
    return true;
}

IrreducibleScan scan_irreducible(const RewritingSystem& sys,
                                 const std::vector<char>& arrow_allowed, long max_count,
                                 std::optional<int> max_length) {
    const GradedQuiver& q = sys.quiver;
    IrreducibleScan scan;

    std::set<int> killed;
    std::vector<std::vector<int>> leads;
    for (const auto& rule : sys.rules) {
        if (rule.lead.is_trivial()) {
            killed.insert(rule.lead.base);
        } else {
            bool relevant = true;
            for (int a : rule.lead.word)
                if (!arrow_allowed[a]) relevant = false;
            if (relevant) leads.push_back(rule.lead.word);
        }
    }

    // Aho-Corasick over the lead words
    struct Node {
        std::map<int, int> next;
        int fail = 0;
        bool dead = false;
    };
    std::vector<Node> ac(1);
    for (const auto& w : leads) {
        int s = 0;
        for (int letter : w) {
            auto it = ac[s].next.find(letter);
            if (it == ac[s].next.end()) {
                ac[s].next.emplace(letter, static_cast<int>(ac.size()));
                s = static_cast<int>(ac.size());
                ac.push_back(Node{});
            } else {
                s = it->second;
            }
        }
        ac[s].dead = true;
    }
    {
        std::deque<int> bfs;
        for (auto& [letter, t] : ac[0].next) {
            ac[t].fail = 0;
            bfs.push_back(t);
        }
        while (!bfs.empty()) {
            int s = bfs.front();
            bfs.pop_front();
            for (auto& [letter, t] : ac[s].next) {
                int f = ac[s].fail;
                while (f != 0 && !ac[f].next.count(letter)) f = ac[f].fail;
                auto it = ac[f].next.find(letter);
                ac[t].fail = (it != ac[f].next.end() && it->second != t) ? it->second : 0;
                ac[t].dead = ac[t].dead || ac[ac[t].fail].dead;
                bfs.push_back(t);
            }
        }
    }
    auto ac_step = [&](int s, int letter) {
        while (true) {
            auto it = ac[s].next.find(letter);
            if (it != ac[s].next.end()) return it->second;
            if (s == 0) return 0;
            s = ac[s].fail;
        }
    };

    long nv = q.vertex_count();
    auto state_id = [&](int v, int s) { return static_cast<long>(s) * nv + v; };

    // cycle probe (only meaningful for the unbounded scan)
    if (!max_length) {
        std::map<long, int> color;  // 0 absent/white, 1 gray, 2 black
        // stack entry: (v, s, next arrow to try, letter taken to get here)
        struct Frame {
            int v, s;
            int next_arrow = 0;
            int in_letter = -1;
        };
        for (int v0 = 0; v0 < q.vertex_count() && !scan.has_cycle; ++v0) {
            if (killed.count(v0)) continue;
            if (color.count(state_id(v0, 0))) continue;
            std::vector<Frame> stack{Frame{v0, 0, 0, -1}};
            color[state_id(v0, 0)] = 1;
            while (!stack.empty() && !scan.has_cycle) {
                Frame& f = stack.back();
                if (f.next_arrow >= q.arrow_count()) {
                    color[state_id(f.v, f.s)] = 2;
                    stack.pop_back();
                    continue;
                }
                int a = f.next_arrow++;
                if (!arrow_allowed[a]) continue;
                if (q.arrow(a).target != f.v) continue;  // append on the source side
                int nvtx = q.arrow(a).source;
                if (killed.count(nvtx)) continue;
                int ns = ac_step(f.s, a);
                if (ac[ns].dead) continue;
                long id = state_id(nvtx, ns);
                auto cit = color.find(id);
                if (cit == color.end()) {
                    color[id] = 1;
                    stack.push_back(Frame{nvtx, ns, 0, a});
                } else if (cit->second == 1) {
                    // gray: the letters from that frame onward close a cycle
                    std::vector<int> letters;
                    size_t i = stack.size();
                    while (i > 0) {
                        --i;
                        if (stack[i].v == nvtx && stack[i].s == ns) break;
                    }
                    for (size_t j = i + 1; j < stack.size(); ++j)
                        letters.push_back(stack[j].in_letter);
                    letters.push_back(a);
                    auto w = make_path(q, std::move(letters));
                    if (!w) throw QuiverError("internal: automaton cycle is not a path");
                    scan.has_cycle = true;
                    scan.witness = *w;
                }
            }
        }
        if (scan.has_cycle) return scan;
    }

    // breadth-first enumeration in deglex order
    struct Word {
        Path p;
        int v, s;
    };
    std::vector<Word> level;
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (killed.count(v)) continue;
        level.push_back(Word{trivial_path(q, v), v, 0});
    }
    long count = 0;
    auto emit = [&](const Path& p) {
        if (count >= max_count) {
            scan.truncated = true;
            return false;
        }
        scan.paths.push_back(p);
        ++count;
        return true;
    };
    for (const auto& w : level)
        if (!emit(w.p)) return scan;
    int len = 0;
    while (!level.empty()) {
        ++len;
        if (max_length && len > *max_length) break;
        std::vector<Word> next_level;
        for (const auto& w : level) {
            for (int a = 0; a < q.arrow_count(); ++a) {
                if (!arrow_allowed[a]) continue;
                if (q.arrow(a).target != w.v) continue;
                int nvtx = q.arrow(a).source;
                if (killed.count(nvtx)) continue;
                int ns = ac_step(w.s, a);
                if (ac[ns].dead) continue;
                Word nw;
                nw.p.word = w.p.word;
                nw.p.word.push_back(a);
                nw.p.base = nvtx;
                nw.v = nvtx;
                nw.s = ns;
                next_level.push_back(std::move(nw));
            }
        }
        // lexicographic within the level: extend in word order, then letter
        // order -- already the construction order above
        for (const auto& w : next_level)
            if (!emit(w.p)) return scan;
        level = std::move(next_level);
    }
    return scan;
}

std::vector<AlgElement> degree_zero_relations(const DgPresentation& pres) {
    std::vector<AlgElement> rels;
    int want = 3 - pres.n;
    for (int i = 0; i < pres.base.arrow_count(); ++i) {
        if (pres.base.arrow(i).degree != want) continue;
        AlgElement r = cyclic_derivative(pres.base, pres.potential, i);
        if (!r.is_zero()) rels.push_back(std::move(r));
    }
    return rels;
}

H0Result h0(const DgPresentation& pres, long max_steps, long max_basis) {
    if (!check_d_squared(pres).ok)
        throw QuiverError("h0: d^2 != 0; fix the presentation before homology");
    const GradedQuiver& q = pres.base;
    for (int i = 0; i < q.arrow_count(); ++i) {
        int d = q.arrow(i).degree;
        if (d < 3 - pres.n || d > 0)
            throw QuiverError("h0: arrow '" + q.arrow(i).name + "' has degree " +
                              std::to_string(d) + " outside [3-n, 0]; out of scope");
    }

    H0Result res;
    res.relations = degree_zero_relations(pres);
    for (const auto& r : res.relations)
        for (const auto& [p, c] : r.terms()) {
            (void)c;
            for (int a : p.word)
                if (q.arrow(a).degree != 0)
                    throw QuiverError("internal: degree-zero relation uses a nonzero-degree arrow");
            if (pres.n == 3 && p.length() < 2) res.completed_convention_caveat = true;
        }
    if (res.completed_convention_caveat)
        res.note = "relation with a term of length < 2: verdict follows the non-completed "
                   "path algebra convention; ";

    res.system = complete_rewriting(q, res.relations, max_steps);
    if (res.system.status == CompletionStatus::bound_exceeded) {
        res.verdict = H0Verdict::undetermined;
        res.note += "completion exceeded max_steps = " + std::to_string(max_steps);
        return res;
    }

    std::vector<char> allowed(q.arrow_count(), 0);
    for (int i = 0; i < q.arrow_count(); ++i) allowed[i] = (q.arrow(i).degree == 0);

    IrreducibleScan scan = scan_irreducible(res.system, allowed, max_basis);
    if (scan.has_cycle) {
        res.verdict = H0Verdict::infinite;
        res.witness = scan.witness;
        return res;
    }
    if (scan.truncated) {
        res.verdict = H0Verdict::undetermined;
        res.note += "irreducible paths exceed max_basis = " + std::to_string(max_basis);
        return res;
    }
    res.verdict = H0Verdict::finite;
    res.basis = std::move(scan.paths);
    return res;
}

AlgElement h0_multiply(const H0Result& res, const Path& x, const Path& y) {
    if (res.verdict != H0Verdict::finite)
        throw QuiverError("h0_multiply: verdict is not finite");
    const GradedQuiver& q = res.system.quiver;
    auto xy = compose(q, x, y);
    if (!xy) return AlgElement{};
    return res.system.reduce(AlgElement::path_term(q, *xy));
}

}  // namespace quipot
