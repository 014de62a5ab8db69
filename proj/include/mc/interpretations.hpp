#ifndef MC_INTERPRETATIONS_HPP
#define MC_INTERPRETATIONS_HPP

// Finite (pointed) interpretations: satisfaction checking, chain models,
// unfolding, the tree-shape predicate, canonical models of satisfiable EL⊥
// concepts, and the tree → EL concept direction.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mc/concepts.hpp"

namespace mc {

// ── Interpretation ──────────────────────────────────────────────────────────
// Element ids are opaque strings.  Maps are partial: an absent concept/role
// key means the empty extension.

struct Interpretation {
    std::vector<std::string> domain;  // non-empty, ordered, duplicate-free
    std::map<std::string, std::set<std::string>> concept_ext;
    std::map<std::string, std::set<std::pair<std::string, std::string>>> role_ext;

    bool has_element(const std::string& e) const;
    // Throws InputError when the domain is empty/duplicated or an extension
    // mentions an element outside the domain; when `sig` is given, also when
    // an extension key is not declared in it.
    void validate(const Signature* sig = nullptr) const;

    const std::set<std::string>& extension_of(const std::string& concept_name) const;
    const std::set<std::pair<std::string, std::string>>& pairs_of(const std::string& role_name) const;
    std::vector<std::string> successors(const std::string& e, const std::string& role_name) const;
    // Concept names holding at e, restricted to sig when given.
    std::set<std::string> labels_at(const std::string& e, const Signature* sig = nullptr) const;
};

struct PointedInterpretation {
    Interpretation interp;
    std::string point;

    void validate(const Signature* sig = nullptr) const;
};

// ── Satisfaction ────────────────────────────────────────────────────────────
// Standard ALC semantics; absent names denote empty extensions.
bool model_check(const PointedInterpretation& pi, const Concept& c);

// Full extension of c in i (bottom-up evaluation).
std::set<std::string> extension(const Interpretation& i, const Concept& c);

// ── Constructions ───────────────────────────────────────────────────────────

// Domain {0..n}, edges (i, i+1) under `role`, point "0", no concept holds.
PointedInterpretation chain_model(std::size_t n, const std::string& role);
// As above with the single role taken from sig; throws InputError when sig
// has no role name.
PointedInterpretation chain_model(std::size_t n, const Signature& sig);

// Tree of all paths from the point of length ≤ k; k-bisimilar to pi.
PointedInterpretation unfold(const PointedInterpretation& pi, std::size_t k);

// True iff pi is a finite rooted tree: point has in-degree 0, every other
// element in-degree exactly 1 (counting all roles), and all of the domain is
// reachable from the point.
bool is_tree_shaped(const PointedInterpretation& pi);

// Satisfiability of an EL⊥ concept by bottom-propagation rewriting.
// Throws DialectError on ALC input.
bool el_bot_satisfiable(const Concept& c);

// Canonical model of a satisfiable EL⊥ concept: top/names give a singleton,
// exists a fresh root over the child's model, conjunction identifies roots.
// Element ids are tree paths.  Throws UnsatisfiableConceptError.
PointedInterpretation canonical_model(const Concept& c);

// EL concept whose canonical model is isomorphic to the given finite tree.
// Throws NotTreeShapedError.
Concept concept_of_tree(const PointedInterpretation& pi);

// Rooted-labeled-tree isomorphism by canonical-form comparison.
bool isomorphic_trees(const PointedInterpretation& p1, const PointedInterpretation& p2);

// Length of the longest path from the point (trees only).
std::size_t tree_depth(const PointedInterpretation& pi);

// ── JSON ────────────────────────────────────────────────────────────────────
// {"domain": [...], "concepts": {"A": [...]}, "roles": {"r": [["d","e"]]},
//  "point": "d"} — missing keys mean empty extensions.
PointedInterpretation pointed_from_json_text(const std::string& text, const Signature* sig = nullptr);
std::string pointed_to_json_text(const PointedInterpretation& pi);

Signature signature_from_json_text(const std::string& text);
std::string signature_to_json_text(const Signature& sig);

}  // namespace mc

#endif
