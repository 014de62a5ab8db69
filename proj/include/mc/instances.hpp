#ifndef MC_INSTANCES_HPP
#define MC_INSTANCES_HPP

// Canned worked instances used by the demos, the tests and the CLI `demo`
// subcommand.  Each builder returns a self-contained bundle of signature,
// concepts and pointed interpretations.

#include <iosfwd>
#include <string>
#include <vector>

#include "mc/oracle.hpp"

namespace mc {

// Platypus: base Mammal ⊓ ∃lays.Egg; two worlds differing on Herbivore.
struct ZooEviction {
    Signature sig;
    Concept base;
    PointedInterpretation herbivore_free;  // (I with d ∉ Herbivore, d)
    PointedInterpretation herbivore;       // (I with d ∈ Herbivore, d)
};
ZooEviction zoo_eviction_instance();

// Marsupials: base Koala ⊔ Kangaroo; a labeled Tasmanian-devil world to add.
struct ZooReception {
    Signature sig;
    Concept base;
    PointedInterpretation devil;
    PointedInterpretation koala;
};
ZooReception zoo_reception_instance();

// Koalas: base Mammal ⊓ Marsupial ⊓ ¬Placental; swap the placental status.
struct ZooRevision {
    Signature sig;
    Concept base;
    PointedInterpretation non_placental;  // to remove
    PointedInterpretation placental;      // to incorporate
    Concept target;                       // Mammal ⊓ Marsupial ⊓ Placental
};
ZooRevision zoo_revision_instance();

// Chains over (∅, {r}): base ∃r³.⊤, chain of length 1 and chain of length 2.
struct ChainReception {
    Signature sig;
    Concept base;                // ∃r³.⊤
    PointedInterpretation one;   // (I₁, d₁): single r-edge
    PointedInterpretation two;   // (I₂, d₁): two chained r-edges
};
ChainReception chain_reception_instance();

// Loop over ({A}, {r}): base ∃r.⊤ and the single-point reflexive model.
struct LoopEviction {
    Signature sig;
    Concept base;
    PointedInterpretation loop;  // not tree-shaped; documented negative
};
LoopEviction loop_eviction_instance();

// Revision over ({A}, {r}): base ∃r.⊤, add an A-leaf chain, remove an
// A-rooted two-edge chain.
struct ChainRevision {
    Signature sig;
    Concept base;
    PointedInterpretation add;     // (I₁, d₁): A = {d₂}, r = {(d₁,d₂)}
    PointedInterpretation remove;  // (I₂, d₁): A = {d₁}, r = {(d₁,d₂),(d₂,d₃)}
};
ChainRevision chain_revision_instance();

// Flat revision over ({A,B,C}, ∅): base B ⊓ C and four one-point worlds.
struct FlatRevision {
    Signature sig;
    Concept base;
    PointedInterpretation w_ac;   // to incorporate
    PointedInterpretation w_none; // to remove
    PointedInterpretation w_c;
    PointedInterpretation w_bc;   // a model of the base
};
FlatRevision flat_revision_instance();

// Characteristic-translation showcase over ({A,B}, {r,s}).
struct TranslationShowcase {
    Signature sig;
    Concept input;   // B ⊓ ∃r.(A ⊓ B)
    Concept target;  // its expected translation
};
TranslationShowcase translation_showcase_instance();

// Named demos: zoo-eviction, zoo-reception, zoo-revision,
// chain-inseparability, loop-eviction, strict-chain, chain-reception,
// chain-revision, flat-revision, translation.
// Prints a deterministic report; returns overall pass.
bool run_demo(const std::string& name, std::ostream& out);
const std::vector<std::string>& demo_names();
bool run_all_demos(std::ostream& out);

}  // namespace mc

#endif
