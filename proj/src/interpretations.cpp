#include "mc/interpretations.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "json.hpp"

namespace mc {

// ── Interpretation basics ───────────────────────────────────────────────────

bool Interpretation::has_element(const std::string& e) const {
    return std::find(domain.begin(), domain.end(), e) != domain.end();
}

void Interpretation::validate(const Signature* sig) const {
    if (domain.empty()) throw InputError("interpretation domain is empty");
    std::set<std::string> seen(domain.begin(), domain.end());
    if (seen.size() != domain.size()) throw InputError("interpretation domain has duplicates");
    for (const auto& [name, ext] : concept_ext) {
        if (sig && !sig->has_concept_name(name)) {
            throw InputError("concept key '" + name + "' not in signature");
        }
        for (const auto& e : ext) {
            if (!seen.count(e)) {
                throw InputError("concept '" + name + "' mentions unknown element '" + e + "'");
            }
        }
    }
    for (const auto& [name, ext] : role_ext) {
        if (sig && !sig->has_role_name(name)) {
            throw InputError("role key '" + name + "' not in signature");
        }
        for (const auto& [a, b] : ext) {
            if (!seen.count(a) || !seen.count(b)) {
                throw InputError("role '" + name + "' mentions an unknown element");
            }
        }
    }
}

const std::set<std::string>& Interpretation::extension_of(const std::string& concept_name) const {
    static const std::set<std::string> empty;
    auto it = concept_ext.find(concept_name);
    return it == concept_ext.end() ? empty : it->second;
}

const std::set<std::pair<std::string, std::string>>& Interpretation::pairs_of(
    const std::string& role_name) const {
    static const std::set<std::pair<std::string, std::string>> empty;
    auto it = role_ext.find(role_name);
    return it == role_ext.end() ? empty : it->second;
}

std::vector<std::string> Interpretation::successors(const std::string& e,
                                                    const std::string& role_name) const {
    std::vector<std::string> out;
    for (const auto& [a, b] : pairs_of(role_name)) {
        if (a == e) out.push_back(b);
    }
    return out;
}

std::set<std::string> Interpretation::labels_at(const std::string& e, const Signature* sig) const {
    std::set<std::string> out;
    for (const auto& [name, ext] : concept_ext) {
        if (sig && !sig->has_concept_name(name)) continue;
        if (ext.count(e)) out.insert(name);
    }
    return out;
}

void PointedInterpretation::validate(const Signature* sig) const {
    interp.validate(sig);
    if (!interp.has_element(point)) {
        throw InputError("point '" + point + "' not in interpretation domain");
    }
}

// ── Satisfaction ────────────────────────────────────────────────────────────

std::set<std::string> extension(const Interpretation& i, const Concept& c) {
    switch (c.ctor()) {
        case Ctor::Top:
            return {i.domain.begin(), i.domain.end()};
        case Ctor::Bot:
            return {};
        case Ctor::Name:
            return i.extension_of(c.symbol());
        case Ctor::Not: {
            std::set<std::string> inner = extension(i, c.children()[0]);
            std::set<std::string> out;
            for (const auto& e : i.domain) {
                if (!inner.count(e)) out.insert(e);
            }
            return out;
        }
        case Ctor::And: {
            std::set<std::string> out{i.domain.begin(), i.domain.end()};
            for (const auto& k : c.children()) {
                std::set<std::string> part = extension(i, k), next;
                std::set_intersection(out.begin(), out.end(), part.begin(), part.end(),
                                      std::inserter(next, next.begin()));
                out = std::move(next);
            }
            return out;
        }
        case Ctor::Or: {
            std::set<std::string> out;
            for (const auto& k : c.children()) {
                std::set<std::string> part = extension(i, k);
                out.insert(part.begin(), part.end());
            }
            return out;
        }
        case Ctor::Exists: {
            std::set<std::string> inner = extension(i, c.children()[0]);
            std::set<std::string> out;
            for (const auto& [a, b] : i.pairs_of(c.symbol())) {
                if (inner.count(b)) out.insert(a);
            }
            return out;
        }
        case Ctor::Forall: {
            std::set<std::string> inner = extension(i, c.children()[0]);
            std::set<std::string> out{i.domain.begin(), i.domain.end()};
            for (const auto& [a, b] : i.pairs_of(c.symbol())) {
                if (!inner.count(b)) out.erase(a);
            }
            return out;
        }
    }
    return {};
}

bool model_check(const PointedInterpretation& pi, const Concept& c) {
    return extension(pi.interp, c).count(pi.point) > 0;
}

// ── Chain models ────────────────────────────────────────────────────────────

PointedInterpretation chain_model(std::size_t n, const std::string& role) {
    PointedInterpretation pi;
    for (std::size_t i = 0; i <= n; ++i) pi.interp.domain.push_back(std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
        pi.interp.role_ext[role].emplace(std::to_string(i), std::to_string(i + 1));
    }
    pi.point = "0";
    return pi;
}

PointedInterpretation chain_model(std::size_t n, const Signature& sig) {
    if (sig.role_names().empty()) {
        throw InputError("chain model requires a role name in the signature");
    }
    return chain_model(n, sig.role_names().front());
}

// ── Unfolding ───────────────────────────────────────────────────────────────

PointedInterpretation unfold(const PointedInterpretation& pi, std::size_t k) {
    PointedInterpretation out;
    out.point = pi.point;

    struct PathNode {
        std::string id;       // path-encoded element id in the unfolding
        std::string element;  // original element
        std::size_t len;
    };
    std::deque<PathNode> queue{{pi.point, pi.point, 0}};
    std::vector<std::string> role_names;
    for (const auto& [r, _] : pi.interp.role_ext) role_names.push_back(r);

    while (!queue.empty()) {
        PathNode cur = queue.front();
        queue.pop_front();
        out.interp.domain.push_back(cur.id);
        for (const auto& [name, ext] : pi.interp.concept_ext) {
            if (ext.count(cur.element)) out.interp.concept_ext[name].insert(cur.id);
        }
        if (cur.len == k) continue;
        for (const auto& r : role_names) {
            for (const auto& succ : pi.interp.successors(cur.element, r)) {
                std::string child_id = cur.id + "/" + r + "/" + succ;
                out.interp.role_ext[r].emplace(cur.id, child_id);
                queue.push_back({std::move(child_id), succ, cur.len + 1});
            }
        }
    }
    return out;
}

// ── Tree shape ──────────────────────────────────────────────────────────────

bool is_tree_shaped(const PointedInterpretation& pi) {
    std::map<std::string, std::size_t> indeg;
    for (const auto& e : pi.interp.domain) indeg[e] = 0;
    for (const auto& [r, pairs] : pi.interp.role_ext) {
        for (const auto& [a, b] : pairs) ++indeg[b];
    }
    if (indeg[pi.point] != 0) return false;
    for (const auto& e : pi.interp.domain) {
        if (e != pi.point && indeg[e] != 1) return false;
    }
    // In-degrees alone make cycles unreachable, so reachability completes
    // the check.
    std::set<std::string> seen{pi.point};
    std::deque<std::string> queue{pi.point};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& [r, pairs] : pi.interp.role_ext) {
            for (const auto& [a, b] : pairs) {
                if (a == cur && seen.insert(b).second) queue.push_back(b);
            }
        }
    }
    return seen.size() == pi.interp.domain.size();
}

std::size_t tree_depth(const PointedInterpretation& pi) {
    if (!is_tree_shaped(pi)) throw NotTreeShapedError("tree_depth: input is not tree-shaped");
    std::function<std::size_t(const std::string&)> go = [&](const std::string& e) {
        std::size_t best = 0;
        for (const auto& [r, pairs] : pi.interp.role_ext) {
            for (const auto& [a, b] : pairs) {
                if (a == e) best = std::max(best, 1 + go(b));
            }
        }
        return best;
    };
    return go(pi.point);
}

// ── EL⊥ satisfiability ──────────────────────────────────────────────────────
// Bottom propagation: ⊥ absorbs conjunctions, exists r.⊥ rewrites to ⊥.

static Concept propagate_bot(const Concept& c) {
    switch (c.ctor()) {
        case Ctor::And: {
            std::vector<Concept> parts;
            for (const auto& k : c.children()) {
                Concept p = propagate_bot(k);
                if (p.ctor() == Ctor::Bot) return Concept::bot();
                parts.push_back(std::move(p));
            }
            return Concept::conj(std::move(parts));
        }
        case Ctor::Exists: {
            Concept p = propagate_bot(c.children()[0]);
            if (p.ctor() == Ctor::Bot) return Concept::bot();
            return Concept::exists(c.symbol(), p);
        }
        default:
            return c;
    }
}

bool el_bot_satisfiable(const Concept& c) {
    if (dialect_of(c) == Dialect::ALC) {
        throw DialectError("el_bot_satisfiable expects an EL⊥ concept, got: " + c.text());
    }
    return propagate_bot(c).ctor() != Ctor::Bot;
}

// ── Canonical model ─────────────────────────────────────────────────────────
// Intermediate tree value; converted to a path-named interpretation at the
// end so element ids are deterministic.

namespace {

struct Tree {
    std::set<std::string> labels;
    std::vector<std::pair<std::string, Tree>> children;  // (role, subtree)
};

Tree tree_of_concept(const Concept& c) {
    Tree t;
    switch (c.ctor()) {
        case Ctor::Top:
            break;
        case Ctor::Name:
            t.labels.insert(c.symbol());
            break;
        case Ctor::Exists:
            t.children.emplace_back(c.symbol(), tree_of_concept(c.children()[0]));
            break;
        case Ctor::And:
            // Root identification: merge the conjuncts' roots.
            for (const auto& k : c.children()) {
                Tree part = tree_of_concept(k);
                t.labels.insert(part.labels.begin(), part.labels.end());
                for (auto& ch : part.children) t.children.push_back(std::move(ch));
            }
            break;
        default:
            throw DialectError("canonical model undefined for: " + c.text());
    }
    return t;
}

void emit_tree(const Tree& t, const std::string& id, PointedInterpretation& out) {
    out.interp.domain.push_back(id);
    for (const auto& l : t.labels) out.interp.concept_ext[l].insert(id);
    std::map<std::string, std::size_t> per_role_index;
    for (const auto& [role, child] : t.children) {
        const std::size_t idx = per_role_index[role]++;
        std::string child_id = (id == "ε" ? std::string() : id + "/") + role + "." +
                               std::to_string(idx);
        out.interp.role_ext[role].emplace(id, child_id);
        emit_tree(child, child_id, out);
    }
}

PointedInterpretation tree_to_pointed(const Tree& t) {
    PointedInterpretation out;
    out.point = "ε";
    emit_tree(t, "ε", out);
    return out;
}

Tree pointed_to_tree(const PointedInterpretation& pi, const std::string& e) {
    Tree t;
    t.labels = pi.interp.labels_at(e);
    for (const auto& [r, pairs] : pi.interp.role_ext) {
        for (const auto& [a, b] : pairs) {
            if (a == e) t.children.emplace_back(r, pointed_to_tree(pi, b));
        }
    }
    return t;
}

}  // namespace

PointedInterpretation canonical_model(const Concept& c) {
    if (dialect_of(c) == Dialect::ALC) {
        throw DialectError("canonical_model expects an EL⊥ concept, got: " + c.text());
    }
    Concept reduced = propagate_bot(c);
    if (reduced.ctor() == Ctor::Bot) {
        throw UnsatisfiableConceptError("canonical_model of unsatisfiable concept: " + c.text());
    }
    return tree_to_pointed(tree_of_concept(reduced));
}

Concept concept_of_tree(const PointedInterpretation& pi) {
    if (!is_tree_shaped(pi)) {
        throw NotTreeShapedError("concept_of_tree: input is not tree-shaped");
    }
    std::function<Concept(const std::string&)> go = [&](const std::string& e) {
        std::vector<Concept> parts;
        for (const auto& l : pi.interp.labels_at(e)) parts.push_back(Concept::name(l));
        for (const auto& [r, pairs] : pi.interp.role_ext) {
            for (const auto& [a, b] : pairs) {
                if (a == e) parts.push_back(Concept::exists(r, go(b)));
            }
        }
        return Concept::conj(std::move(parts));
    };
    return go(pi.point);
}

// ── Tree isomorphism ────────────────────────────────────────────────────────

static std::string tree_canon(const PointedInterpretation& pi, const std::string& e) {
    std::string out = "{";
    for (const auto& l : pi.interp.labels_at(e)) out += l + ",";
    out += "}(";
    std::vector<std::string> kids;
    for (const auto& [r, pairs] : pi.interp.role_ext) {
        for (const auto& [a, b] : pairs) {
            if (a == e) kids.push_back(r + ":" + tree_canon(pi, b));
        }
    }
    std::sort(kids.begin(), kids.end());
    for (const auto& k : kids) out += k + ";";
    out += ")";
    return out;
}

bool isomorphic_trees(const PointedInterpretation& p1, const PointedInterpretation& p2) {
    if (!is_tree_shaped(p1) || !is_tree_shaped(p2)) {
        throw NotTreeShapedError("isomorphic_trees: inputs must be tree-shaped");
    }
    return tree_canon(p1, p1.point) == tree_canon(p2, p2.point);
}

// ── JSON ────────────────────────────────────────────────────────────────────

using nlohmann::json;

static json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    return j;
}

PointedInterpretation pointed_from_json_text(const std::string& text, const Signature* sig) {
    json j = parse_json(text);
    if (!j.is_object()) throw InputError("interpretation file: expected a JSON object");
    PointedInterpretation pi;
    if (!j.contains("domain") || !j["domain"].is_array()) {
        throw InputError("interpretation file: missing 'domain' array");
    }
    for (const auto& e : j["domain"]) {
        if (!e.is_string()) throw InputError("interpretation file: domain elements must be strings");
        pi.interp.domain.push_back(e.get<std::string>());
    }
    if (j.contains("concepts")) {
        for (const auto& [name, arr] : j["concepts"].items()) {
            if (!arr.is_array()) throw InputError("concept '" + name + "': expected an array");
            for (const auto& e : arr) pi.interp.concept_ext[name].insert(e.get<std::string>());
        }
    }
    if (j.contains("roles")) {
        for (const auto& [name, arr] : j["roles"].items()) {
            if (!arr.is_array()) throw InputError("role '" + name + "': expected an array of pairs");
            for (const auto& p : arr) {
                if (!p.is_array() || p.size() != 2) {
                    throw InputError("role '" + name + "': each entry must be a pair");
                }
                pi.interp.role_ext[name].emplace(p[0].get<std::string>(), p[1].get<std::string>());
            }
        }
    }
    if (!j.contains("point") || !j["point"].is_string()) {
        throw InputError("interpretation file: missing 'point'");
    }
    pi.point = j["point"].get<std::string>();
    pi.validate(sig);
    return pi;
}

std::string pointed_to_json_text(const PointedInterpretation& pi) {
    json j;
    j["domain"] = pi.interp.domain;
    j["concepts"] = json::object();
    for (const auto& [name, ext] : pi.interp.concept_ext) {
        j["concepts"][name] = std::vector<std::string>(ext.begin(), ext.end());
    }
    j["roles"] = json::object();
    for (const auto& [name, pairs] : pi.interp.role_ext) {
        json arr = json::array();
        for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
        j["roles"][name] = arr;
    }
    j["point"] = pi.point;
    return j.dump(2);
}

Signature signature_from_json_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw InputError("signature file: expected a JSON object");
    std::vector<std::string> cs, rs;
    if (j.contains("concepts")) {
        for (const auto& e : j["concepts"]) cs.push_back(e.get<std::string>());
    }
    if (j.contains("roles")) {
        for (const auto& e : j["roles"]) rs.push_back(e.get<std::string>());
    }
    return Signature(std::move(cs), std::move(rs));
}

std::string signature_to_json_text(const Signature& sig) {
    json j;
    j["concepts"] = sig.concept_names();
    j["roles"] = sig.role_names();
    return j.dump(2);
}

}  // namespace mc
