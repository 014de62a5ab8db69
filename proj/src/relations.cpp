#include "mc/relations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace mc {

// ── Reachability helper ─────────────────────────────────────────────────────

static std::vector<std::string> reachable_from(const PointedInterpretation& pi,
                                               const std::vector<std::string>& roles) {
    std::set<std::string> seen{pi.point};
    std::deque<std::string> queue{pi.point};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& r : roles) {
            for (const auto& succ : pi.interp.successors(cur, r)) {
                if (seen.insert(succ).second) queue.push_back(succ);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// ── Bisimulation ────────────────────────────────────────────────────────────
// Greatest-fixpoint pruning over the atom-compatible pair set; no partition
// refinement needed at this scale.


std::optional<Bisimulation> bisimilar(const PointedInterpretation& p1,
                                      const PointedInterpretation& p2, const Signature& sig) {
    const std::vector<std::string>& roles = sig.role_names();
    std::vector<std::string> left = reachable_from(p1, roles);
    std::vector<std::string> right = reachable_from(p2, roles);

    auto lidx = [&](const std::string& e) {
        return std::lower_bound(left.begin(), left.end(), e) - left.begin();
    };
    auto ridx = [&](const std::string& e) {
        return std::lower_bound(right.begin(), right.end(), e) - right.begin();
    };

    std::vector<std::set<std::string>> llabels(left.size()), rlabels(right.size());
    for (std::size_t i = 0; i < left.size(); ++i) llabels[i] = p1.interp.labels_at(left[i], &sig);
    for (std::size_t j = 0; j < right.size(); ++j) rlabels[j] = p2.interp.labels_at(right[j], &sig);

    std::vector<std::vector<bool>> ok(left.size(), std::vector<bool>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            ok[i][j] = llabels[i] == rlabels[j];
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::size_t j = 0; j < right.size(); ++j) {
                if (!ok[i][j]) continue;
                bool alive = true;
                for (const auto& r : roles) {
                    // forth
                    for (const auto& s1 : p1.interp.successors(left[i], r)) {
                        bool matched = false;
                        for (const auto& s2 : p2.interp.successors(right[j], r)) {
                            if (ok[lidx(s1)][ridx(s2)]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            alive = false;
                            break;
                        }
                    }
                    if (!alive) break;
                    // back
                    for (const auto& s2 : p2.interp.successors(right[j], r)) {
                        bool matched = false;
                        for (const auto& s1 : p1.interp.successors(left[i], r)) {
                            if (ok[lidx(s1)][ridx(s2)]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            alive = false;
                            break;
                        }
                    }
                    if (!alive) break;
                }
                if (!alive) {
                    ok[i][j] = false;
                    changed = true;
                }
            }
        }
    }

    if (!ok[lidx(p1.point)][ridx(p2.point)]) return std::nullopt;
    Bisimulation z;
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (ok[i][j]) z.pairs.emplace_back(left[i], right[j]);
        }
    }
    return z;
}

// ── k-bisimulation ──────────────────────────────────────────────────────────

bool k_bisimilar(const PointedInterpretation& p1, const PointedInterpretation& p2,
                 std::size_t k, const Signature& sig) {
    const std::vector<std::string>& roles = sig.role_names();
    std::vector<std::string> left = reachable_from(p1, roles);
    std::vector<std::string> right = reachable_from(p2, roles);
    auto lidx = [&](const std::string& e) {
        return std::lower_bound(left.begin(), left.end(), e) - left.begin();
    };
    auto ridx = [&](const std::string& e) {
        return std::lower_bound(right.begin(), right.end(), e) - right.begin();
    };

    std::vector<std::vector<bool>> rel(left.size(), std::vector<bool>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            rel[i][j] = p1.interp.labels_at(left[i], &sig) == p2.interp.labels_at(right[j], &sig);
        }
    }
    const std::vector<std::vector<bool>> atom = rel;

    for (std::size_t round = 0; round < k; ++round) {
        std::vector<std::vector<bool>> next = atom;
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::size_t j = 0; j < right.size(); ++j) {
                if (!next[i][j]) continue;
                bool alive = true;
                for (const auto& r : roles) {
                    for (const auto& s1 : p1.interp.successors(left[i], r)) {
                        bool matched = false;
                        for (const auto& s2 : p2.interp.successors(right[j], r)) {
                            if (rel[lidx(s1)][ridx(s2)]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            alive = false;
                            break;
                        }
                    }
                    if (!alive) break;
                    for (const auto& s2 : p2.interp.successors(right[j], r)) {
                        bool matched = false;
                        for (const auto& s1 : p1.interp.successors(left[i], r)) {
                            if (rel[lidx(s1)][ridx(s2)]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            alive = false;
                            break;
                        }
                    }
                    if (!alive) break;
                }
                next[i][j] = alive;
            }
        }
        rel = std::move(next);
    }
    return rel[lidx(p1.point)][ridx(p2.point)];
}

bool k_bisimilar(const PointedInterpretation& p1, const PointedInterpretation& p2,
                 std::size_t k) {
    std::vector<std::string> cs, rs;
    for (const auto* pi : {&p1, &p2}) {
        for (const auto& [n, _] : pi->interp.concept_ext) cs.push_back(n);
        for (const auto& [n, _] : pi->interp.role_ext) rs.push_back(n);
    }
    return k_bisimilar(p1, p2, k, Signature(std::move(cs), std::move(rs)));
}

// ── Homomorphism ────────────────────────────────────────────────────────────

bool homomorphism_exists(const PointedInterpretation& src, const PointedInterpretation& tgt) {
    if (!is_tree_shaped(src)) {
        throw NotTreeShapedError("homomorphism_exists: source must be tree-shaped");
    }
    std::map<std::pair<std::string, std::string>, bool> memo;
    std::function<bool(const std::string&, const std::string&)> can_map =
        [&](const std::string& s, const std::string& t) -> bool {
        auto key = std::make_pair(s, t);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo[key] = false;  // guard (src is a tree, so no genuine cycles)
        for (const auto& [name, ext] : src.interp.concept_ext) {
            if (ext.count(s) && !tgt.interp.extension_of(name).count(t)) {
                return memo[key] = false;
            }
        }
        for (const auto& [r, pairs] : src.interp.role_ext) {
            for (const auto& [a, b] : pairs) {
                if (a != s) continue;
                bool matched = false;
                for (const auto& t2 : tgt.interp.successors(t, r)) {
                    if (can_map(b, t2)) {
                        matched = true;
                        break;
                    }
                }
                if (!matched) return memo[key] = false;
            }
        }
        return memo[key] = true;
    };
    return can_map(src.point, tgt.point);
}

// ── EL⊥ subsumption (canonical-model route) ─────────────────────────────────

bool el_subsumes(const Concept& c, const Concept& d) {
    if (dialect_of(c) == Dialect::ALC || dialect_of(d) == Dialect::ALC) {
        throw DialectError("el_subsumes expects EL⊥ concepts");
    }
    if (!el_bot_satisfiable(c)) return true;   // bot is subsumed by everything
    if (!el_bot_satisfiable(d)) return false;  // nothing satisfiable below bot
    return homomorphism_exists(canonical_model(d), canonical_model(c));
}

// ── NNF ─────────────────────────────────────────────────────────────────────

static Concept nnf_neg(const Concept& c);

Concept nnf(const Concept& c) {
    switch (c.ctor()) {
        case Ctor::Top:
        case Ctor::Bot:
        case Ctor::Name:
            return c;
        case Ctor::Not:
            return nnf_neg(c.children()[0]);
        case Ctor::And:
        case Ctor::Or: {
            std::vector<Concept> parts;
            for (const auto& k : c.children()) parts.push_back(nnf(k));
            return c.ctor() == Ctor::And ? Concept::conj(std::move(parts))
                                         : Concept::disj(std::move(parts));
        }
        case Ctor::Exists:
            return Concept::exists(c.symbol(), nnf(c.children()[0]));
        case Ctor::Forall:
            return Concept::forall(c.symbol(), nnf(c.children()[0]));
    }
    return c;
}

static Concept nnf_neg(const Concept& c) {
    switch (c.ctor()) {
        case Ctor::Top:
            return Concept::bot();
        case Ctor::Bot:
            return Concept::top();
        case Ctor::Name:
            return Concept::negation(c);
        case Ctor::Not:
            return nnf(c.children()[0]);
        case Ctor::And: {
            std::vector<Concept> parts;
            for (const auto& k : c.children()) parts.push_back(nnf_neg(k));
            return Concept::disj(std::move(parts));
        }
        case Ctor::Or: {
            std::vector<Concept> parts;
            for (const auto& k : c.children()) parts.push_back(nnf_neg(k));
            return Concept::conj(std::move(parts));
        }
        case Ctor::Exists:
            return Concept::forall(c.symbol(), nnf_neg(c.children()[0]));
        case Ctor::Forall:
            return Concept::exists(c.symbol(), nnf_neg(c.children()[0]));
    }
    return c;
}

// ── Tableau ─────────────────────────────────────────────────────────────────

static bool tableau(std::set<Concept> branch) {
    // Saturate conjunctions.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : branch) {
            if (c.ctor() == Ctor::And) {
                std::vector<Concept> kids = c.children();
                branch.erase(c);
                branch.insert(kids.begin(), kids.end());
                changed = true;
                break;
            }
        }
    }
    // Clash detection on literals.
    for (const auto& c : branch) {
        if (c.ctor() == Ctor::Bot) return false;
        if (c.ctor() == Ctor::Name && branch.count(Concept::negation(c))) return false;
    }
    // Branch on the first disjunction.
    for (const auto& c : branch) {
        if (c.ctor() == Ctor::Or) {
            for (const auto& d : c.children()) {
                std::set<Concept> sub = branch;
                sub.erase(c);
                sub.insert(d);
                if (tableau(std::move(sub))) return true;
            }
            return false;
        }
    }
    // Only literals, exists and forall remain: spawn one successor per exists.
    for (const auto& c : branch) {
        if (c.ctor() != Ctor::Exists) continue;
        std::set<Concept> succ{c.children()[0]};
        for (const auto& f : branch) {
            if (f.ctor() == Ctor::Forall && f.symbol() == c.symbol()) {
                succ.insert(f.children()[0]);
            }
        }
        if (!tableau(std::move(succ))) return false;
    }
    return true;
}

bool alc_satisfiable(const Concept& c) { return tableau({nnf(c)}); }

bool alc_entails(const Concept& c, const Concept& d) {
    return !alc_satisfiable(Concept::conj({c, Concept::negation(d)}));
}

bool equivalent(const Concept& c, const Concept& d) {
    return alc_entails(c, d) && alc_entails(d, c);
}

// ── Brute-force satisfiability oracle ───────────────────────────────────────
// Exhaustive search over tree models of depth ≤ depth(c), branching bounded
// by the number of exists-subconcepts of nnf(c), over signature_of(c).

namespace {

struct FlatTree {
    unsigned label_mask = 0;
    // (role index, index into the previous level's tree list)
    std::vector<std::pair<std::size_t, std::size_t>> kids;
};

PointedInterpretation materialize(const std::vector<std::vector<FlatTree>>& levels,
                                  std::size_t level, std::size_t idx, const Signature& sig) {
    PointedInterpretation out;
    out.point = "n0";
    std::size_t counter = 0;
    std::function<std::string(std::size_t, std::size_t)> emit = [&](std::size_t lv,
                                                                    std::size_t ix) {
        const FlatTree& t = levels[lv][ix];
        std::string id = "n" + std::to_string(counter++);
        out.interp.domain.push_back(id);
        for (std::size_t b = 0; b < sig.concept_names().size(); ++b) {
            if (t.label_mask & (1u << b)) {
                out.interp.concept_ext[sig.concept_names()[b]].insert(id);
            }
        }
        for (const auto& [ri, ci] : t.kids) {
            std::string kid = emit(lv - 1, ci);
            out.interp.role_ext[sig.role_names()[ri]].emplace(id, kid);
        }
        return id;
    };
    emit(level, idx);
    return out;
}

std::size_t count_exists(const Concept& c) {
    std::size_t n = c.ctor() == Ctor::Exists ? 1 : 0;
    for (const auto& k : c.children()) n += count_exists(k);
    return n;
}

}  // namespace

bool alc_satisfiable_by_enumeration(const Concept& c) {
    const Concept n = nnf(c);
    const Signature sig = signature_of(n);
    const std::size_t d = depth(n);
    const std::size_t branch = count_exists(n);
    const std::size_t nlabels = std::size_t{1} << sig.concept_names().size();

    std::vector<std::vector<FlatTree>> levels(d + 1);
    for (unsigned m = 0; m < nlabels; ++m) levels[0].push_back({m, {}});

    auto check_level = [&](std::size_t lv) {
        for (std::size_t i = 0; i < levels[lv].size(); ++i) {
            PointedInterpretation pi = materialize(levels, lv, i, sig);
            if (model_check(pi, n)) return true;
        }
        return false;
    };
    if (d == 0) return check_level(0);

    for (std::size_t lv = 1; lv <= d; ++lv) {
        // Child options: (role, tree at previous level); previous levels
        // already contain all shallower shapes via the empty-kids entries.
        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (std::size_t ri = 0; ri < sig.role_names().size(); ++ri) {
            for (std::size_t ci = 0; ci < levels[lv - 1].size(); ++ci) {
                options.emplace_back(ri, ci);
            }
        }
        // All multisets of options of size ≤ branch (combinations with
        // repetition, realized by non-decreasing index sequences).
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> gen = [&](std::size_t start) {
            FlatTree t;
            for (std::size_t p : pick) t.kids.push_back(options[p]);
            for (unsigned m = 0; m < nlabels; ++m) {
                t.label_mask = m;
                levels[lv].push_back(t);
            }
            if (pick.size() == branch) return;
            for (std::size_t o = start; o < options.size(); ++o) {
                pick.push_back(o);
                gen(o);
                pick.pop_back();
            }
        };
        gen(0);
        if (levels[lv].size() > 4'000'000) {
            throw BudgetError(0, "satisfiability enumeration oracle: tree space too large");
        }
    }
    return check_level(d);
}

}  // namespace mc
