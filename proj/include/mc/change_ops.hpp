#ifndef MC_CHANGE_OPS_HPP
#define MC_CHANGE_OPS_HPP

// Constructive model-change operators: ALC reception/eviction/revision via
// the characteristic translation, and EL⊥ reception via least common
// subsumers.

#include <vector>

#include "mc/characteristic.hpp"
#include "mc/relations.hpp"

namespace mc {

struct ChangeRequest {
    Concept base;
    std::vector<PointedInterpretation> positives;  // to incorporate
    std::vector<PointedInterpretation> negatives;  // to remove
    Signature sig;

    // Tree shape, signature coverage; for revision also bisimulation
    // disjointness.  Throws InputError / RealizabilityError.
    void validate(bool for_revision) const;
};

// True iff no positive/negative cross-pair is bisimilar over sig.
bool bisimulation_disjoint(const std::vector<PointedInterpretation>& ps,
                           const std::vector<PointedInterpretation>& ns,
                           const Signature& sig);

// base ⊔ ⊔ᵢ dagger_of_tree(positiveᵢ): incorporates exactly the bisimulation
// classes of the positives.
Concept receive_alc(const Concept& base, const std::vector<PointedInterpretation>& positives,
                    const Signature& sig);

// base ⊓ ⊓ⱼ ¬dagger_of_tree(negativeⱼ): removes exactly those classes.
Concept evict_alc(const Concept& base, const std::vector<PointedInterpretation>& negatives,
                  const Signature& sig);

// ((⊔ᵢ daggerᵢ ⊔ base) ⊓ ⊓ⱼ ¬daggerⱼ); requires bisimulation-disjoint sides.
Concept revise_alc(const ChangeRequest& req);

// Least common subsumer of two satisfiable EL⊥ concepts: the concept of the
// reachable product of their canonical models (labels intersected, edges
// synchronized per role).  lcs(⊥, x) = x.
Concept el_lcs(const Concept& c, const Concept& d);

// Fold of el_lcs over the base (skipped when unsatisfiable) and the concepts
// of the positive trees.
Concept el_receive(const Concept& base, const std::vector<PointedInterpretation>& positives);

// Drop disjuncts entailed by a sibling disjunct and conjuncts entailed by a
// sibling conjunct (one flattening level; semantics preserved).
Concept prune_redundant(const Concept& c);

// {"base": "<concept>", "signature": {...}, "positives": [...],
//  "negatives": [...]}
ChangeRequest change_request_from_json_text(const std::string& text);

}  // namespace mc

#endif
