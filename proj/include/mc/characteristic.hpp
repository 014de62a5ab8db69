#ifndef MC_CHARACTERISTIC_HPP
#define MC_CHARACTERISTIC_HPP

// The characteristic translation: an ALC concept whose models are exactly
// the bisimulation class of the canonical model of a satisfiable EL⊥ concept
// over a fixed finite signature.

#include "mc/interpretations.hpp"

namespace mc {

// Translate a satisfiable EL⊥ concept.  The input is first flattened into
// "atoms ⊓ grouped existentials" shape; the output conjoins the positive
// atoms, negated absent atoms, per-role exists/forall blocks over translated
// children, and forall-bot for unused roles.  Output is normalized.
// Requires sig ⊇ signature_of(c); throws UnsatisfiableConceptError,
// DialectError or InputError.
Concept dagger(const Concept& c, const Signature& sig);

// dagger(concept_of_tree(pi), sig).
Concept dagger_of_tree(const PointedInterpretation& pi, const Signature& sig);

}  // namespace mc

#endif
