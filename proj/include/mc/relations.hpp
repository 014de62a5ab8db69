#ifndef MC_RELATIONS_HPP
#define MC_RELATIONS_HPP

// Bisimulation, k-bisimulation, homomorphism, EL⊥ subsumption via canonical
// models, and ALC satisfiability/entailment via a tableau.

#include <optional>
#include <utility>
#include <vector>

#include "mc/interpretations.hpp"

namespace mc {

// Witness relation: pairs (element of I, element of J) satisfying the
// atom/forth/back conditions.
struct Bisimulation {
    std::vector<std::pair<std::string, std::string>> pairs;
};

// Greatest bisimulation over the parts reachable from the two points,
// restricted to atoms/roles of sig.  Present iff it relates the points.
std::optional<Bisimulation> bisimilar(const PointedInterpretation& p1,
                                      const PointedInterpretation& p2,
                                      const Signature& sig);

// k rounds of refinement; true iff a k-bisimulation relates the points.
// The signature defaults to all names occurring in either interpretation.
bool k_bisimilar(const PointedInterpretation& p1, const PointedInterpretation& p2,
                 std::size_t k);
bool k_bisimilar(const PointedInterpretation& p1, const PointedInterpretation& p2,
                 std::size_t k, const Signature& sig);

// Homomorphism existence from a finite tree into an arbitrary finite pointed
// interpretation (root to point, labels preserved forward, edges preserved).
bool homomorphism_exists(const PointedInterpretation& src, const PointedInterpretation& tgt);

// ⊨ c ⊑ d for EL⊥ concepts, decided on canonical models: unsatisfiable c is
// subsumed by everything; a satisfiable c is never subsumed by an
// unsatisfiable d; otherwise homomorphism from canonical(d) into canonical(c).
bool el_subsumes(const Concept& c, const Concept& d);

// Concept-satisfiability tableau (negation normal form; and/or/exists/forall
// expansion; clash = complementary literals or bot).
bool alc_satisfiable(const Concept& c);

// Independent brute-force oracle: search over tree models of depth ≤ depth(c)
// and branching ≤ number of exists-subconcepts, over signature_of(c).
bool alc_satisfiable_by_enumeration(const Concept& c);

// c entails d iff c ⊓ ¬d is unsatisfiable.
bool alc_entails(const Concept& c, const Concept& d);

bool equivalent(const Concept& c, const Concept& d);

// Negation normal form (negation only on concept names).
Concept nnf(const Concept& c);

}  // namespace mc

#endif
