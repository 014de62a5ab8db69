#include "mc/change_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "json.hpp"

namespace mc {

// ── Request validation ──────────────────────────────────────────────────────

void ChangeRequest::validate(bool for_revision) const {
    auto check_side = [&](const std::vector<PointedInterpretation>& side, const char* which) {
        for (const auto& pi : side) {
            pi.validate(&sig);
            if (!is_tree_shaped(pi)) {
                throw InputError(std::string(which) + " interpretation is not tree-shaped");
            }
        }
    };
    check_side(positives, "positive");
    check_side(negatives, "negative");
    if (!sig.contains(signature_of(base))) {
        throw InputError("base concept uses names outside the request signature");
    }
    if (for_revision && !bisimulation_disjoint(positives, negatives, sig)) {
        throw RealizabilityError(
            "revision request has bisimilar positive/negative pair; no operator can both "
            "incorporate and remove the same bisimulation class");
    }
}

bool bisimulation_disjoint(const std::vector<PointedInterpretation>& ps,
                           const std::vector<PointedInterpretation>& ns,
                           const Signature& sig) {
    for (const auto& p : ps) {
        for (const auto& n : ns) {
            if (bisimilar(p, n, sig)) return false;
        }
    }
    return true;
}

// ── Helpers ─────────────────────────────────────────────────────────────────

// Deduplicate a side up to bisimilarity (keeps first representatives).
static std::vector<PointedInterpretation> dedupe(const std::vector<PointedInterpretation>& side,
                                                 const Signature& sig) {
    std::vector<PointedInterpretation> out;
    for (const auto& pi : side) {
        bool fresh = true;
        for (const auto& kept : out) {
            if (bisimilar(pi, kept, sig)) {
                fresh = false;
                break;
            }
        }
        if (fresh) out.push_back(pi);
    }
    return out;
}

Concept prune_redundant(const Concept& c) {
    if (c.ctor() != Ctor::And && c.ctor() != Ctor::Or) return c;
    const bool is_and = c.ctor() == Ctor::And;
    std::vector<Concept> kept;
    const auto& kids = c.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < kids.size() && !redundant; ++j) {
            if (i == j) continue;
            // In a conjunction, a conjunct implied by another is redundant;
            // in a disjunction, a disjunct implying another is redundant.
            const bool covered =
                is_and ? alc_entails(kids[j], kids[i]) : alc_entails(kids[i], kids[j]);
            if (!covered) continue;
            // Break equivalence ties by keeping the earlier (print-least) one.
            const bool reverse =
                is_and ? alc_entails(kids[i], kids[j]) : alc_entails(kids[j], kids[i]);
            redundant = !reverse || j < i;
        }
        if (!redundant) kept.push_back(kids[i]);
    }
    return is_and ? Concept::conj(std::move(kept)) : Concept::disj(std::move(kept));
}

// ── ALC operators ───────────────────────────────────────────────────────────

Concept receive_alc(const Concept& base, const std::vector<PointedInterpretation>& positives,
                    const Signature& sig) {
    std::vector<Concept> parts{base};
    for (const auto& pi : dedupe(positives, sig)) {
        if (!sig.contains(signature_of(concept_of_tree(pi)))) {
            throw InputError("positive interpretation uses names outside the signature");
        }
        parts.push_back(dagger_of_tree(pi, sig));
    }
    return prune_redundant(Concept::disj(std::move(parts)));
}

Concept evict_alc(const Concept& base, const std::vector<PointedInterpretation>& negatives,
                  const Signature& sig) {
    std::vector<Concept> parts{base};
    for (const auto& pi : dedupe(negatives, sig)) {
        if (!sig.contains(signature_of(concept_of_tree(pi)))) {
            throw InputError("negative interpretation uses names outside the signature");
        }
        parts.push_back(Concept::negation(dagger_of_tree(pi, sig)));
    }
    return prune_redundant(Concept::conj(std::move(parts)));
}

Concept revise_alc(const ChangeRequest& req) {
    req.validate(/*for_revision=*/true);
    std::vector<Concept> disjuncts{req.base};
    for (const auto& pi : dedupe(req.positives, req.sig)) {
        disjuncts.push_back(dagger_of_tree(pi, req.sig));
    }
    std::vector<Concept> conjuncts{prune_redundant(Concept::disj(std::move(disjuncts)))};
    for (const auto& pi : dedupe(req.negatives, req.sig)) {
        conjuncts.push_back(Concept::negation(dagger_of_tree(pi, req.sig)));
    }
    return prune_redundant(Concept::conj(std::move(conjuncts)));
}

// ── EL⊥ reception via least common subsumers ────────────────────────────────

Concept el_lcs(const Concept& c, const Concept& d) {
    if (dialect_of(c) == Dialect::ALC || dialect_of(d) == Dialect::ALC) {
        throw DialectError("el_lcs expects EL⊥ concepts");
    }
    if (!el_bot_satisfiable(c)) return d;
    if (!el_bot_satisfiable(d)) return c;
    const PointedInterpretation a = canonical_model(c);
    const PointedInterpretation b = canonical_model(d);

    // Reachable product of the two trees, rendered directly as a concept:
    // labels intersect, edges synchronize per role.
    std::function<Concept(const std::string&, const std::string&)> go =
        [&](const std::string& ea, const std::string& eb) {
            std::vector<Concept> parts;
            const auto la = a.interp.labels_at(ea);
            for (const auto& l : b.interp.labels_at(eb)) {
                if (la.count(l)) parts.push_back(Concept::name(l));
            }
            for (const auto& [r, pairs] : a.interp.role_ext) {
                for (const auto& sa : a.interp.successors(ea, r)) {
                    for (const auto& sb : b.interp.successors(eb, r)) {
                        parts.push_back(Concept::exists(r, go(sa, sb)));
                    }
                }
            }
            return Concept::conj(std::move(parts));
        };
    return go(a.point, b.point);
}

Concept el_receive(const Concept& base, const std::vector<PointedInterpretation>& positives) {
    Concept acc = base;
    for (const auto& pi : positives) {
        if (!is_tree_shaped(pi)) {
            throw NotTreeShapedError("el_receive: positives must be tree-shaped");
        }
        acc = el_lcs(acc, concept_of_tree(pi));
    }
    return acc;
}

// ── JSON ────────────────────────────────────────────────────────────────────

ChangeRequest change_request_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw InputError("change request: malformed JSON object");
    }
    if (!j.contains("signature")) throw InputError("change request: missing 'signature'");
    if (!j.contains("base") || !j["base"].is_string()) {
        throw InputError("change request: missing 'base' concept text");
    }
    ChangeRequest req;
    req.sig = signature_from_json_text(j["signature"].dump());
    req.base = parse_concept(j["base"].get<std::string>(), req.sig);
    for (const char* side : {"positives", "negatives"}) {
        if (!j.contains(side)) continue;
        for (const auto& m : j[side]) {
            auto& dst = std::string(side) == "positives" ? req.positives : req.negatives;
            dst.push_back(pointed_from_json_text(m.dump(), &req.sig));
        }
    }
    return req;
}

}  // namespace mc
