#ifndef MC_ORACLE_HPP
#define MC_ORACLE_HPP

// Finite-universe brute-force semantics: enumerate one representative per
// k-bisimulation class of depth-≤k trees, compute mod-sets as bitmasks, the
// finitely-representable families of the bounded ALC / EL⊥ fragments,
// minimal supersets / maximal subsets, chi-minima, the symmetric-differential
// revision function, and per-postulate verdicts on concrete operator runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mc/change_ops.hpp"

namespace mc {

// ── ModelSet ────────────────────────────────────────────────────────────────
// Fixed-width bitmask over universe representatives.

class ModelSet {
public:
    ModelSet() = default;
    explicit ModelSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}
    static ModelSet full(std::size_t n);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v = true);

    std::size_t count() const;
    bool empty() const;

    ModelSet operator&(const ModelSet& o) const;
    ModelSet operator|(const ModelSet& o) const;
    ModelSet operator^(const ModelSet& o) const;
    // Set difference (this minus o).
    ModelSet minus(const ModelSet& o) const;
    ModelSet complement() const;

    bool subset_of(const ModelSet& o) const;
    bool intersects(const ModelSet& o) const;
    bool operator==(const ModelSet& o) const = default;

    // Order by the bit string read from index 0 upward ('0' < '1').
    bool lex_less(const ModelSet& o) const;
    // First index where this and o differ, if any.
    std::optional<std::size_t> first_difference(const ModelSet& o) const;
    std::optional<std::size_t> first_member() const;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// ── FiniteUniverse ──────────────────────────────────────────────────────────

// A k-bisimulation class of depth-≤level trees: root labels plus, per role,
// a set of classes one level down.
struct UniverseClass {
    unsigned label_mask = 0;
    std::vector<std::vector<std::size_t>> child_sets;  // [role] → sorted class indices
};

struct FiniteUniverse {
    Signature sig;
    std::size_t k = 0;
    std::vector<std::vector<UniverseClass>> levels;  // levels[j]: depth ≤ j classes
    std::vector<PointedInterpretation> models;       // representatives of levels[k]

    std::size_t size() const { return models.size(); }
    // Class index of a tree-shaped pointed interpretation of depth ≤ k.
    std::size_t class_of(const PointedInterpretation& pi) const;
    ModelSet class_mask(const std::vector<PointedInterpretation>& trees) const;
};

// Number of classes (by the recursive type count), as log2; used both as the
// preflight and as an independent arithmetic cross-check of enumeration.
double universe_log2_count(const Signature& sig, std::size_t k);

// Default: the hard caps |N_C| ≤ 2, |N_R| ≤ 1, k ≤ 2 apply.  An explicit
// max_classes budget lifts the caps but keeps the class-count preflight.
FiniteUniverse enumerate_universe(const Signature& sig, std::size_t k);
FiniteUniverse enumerate_universe(const Signature& sig, std::size_t k,
                                  std::size_t max_classes);

// Representatives satisfying c.  Sound for concepts of any depth: the
// universe's classes are full bisimulation classes of depth-≤k trees, and
// satisfaction is bisimulation-invariant.
ModelSet satisfying_set(const Concept& c, const FiniteUniverse& u);

// The documented mod(·) operation: enforces depth(c) ≤ k and signature
// coverage, then delegates to satisfying_set.
ModelSet mod_set(const Concept& c, const FiniteUniverse& u);

// ── Finitely representable families ─────────────────────────────────────────

struct FrFamily {
    bool all_subsets = false;      // bounded ALC fragment: every subset is FR
    std::size_t universe_size = 0;
    std::vector<ModelSet> sets;    // explicit family otherwise (sorted, unique)

    bool contains(const ModelSet& m) const;
};

// ALC: all subsets (explicit only when 2^|u| fits the budget; otherwise the
// symbolic all_subsets marker).  EL/EL⊥: mod-sets of depth-≤k concepts,
// computed per level by closing atom and exists-lift profiles under
// intersection.
FrFamily fr_family(const FiniteUniverse& u, Dialect dialect);

std::vector<ModelSet> min_fr_sups(const ModelSet& m, const FrFamily& fr);
std::vector<ModelSet> max_fr_subs(const ModelSet& m, const FrFamily& fr);

// ⪯_b-minimal elements of {Y ∈ fr : mplus ⊆ Y, mminus ∩ Y = ∅}.
// Throws RealizabilityError when the candidate set is empty.
std::vector<ModelSet> chi_min(const ModelSet& b, const ModelSet& mplus,
                              const ModelSet& mminus, const FrFamily& fr);

struct SymDiffResult {
    int case_used;  // 1, 2 or 3
    std::vector<ModelSet> minima;
    ModelSet selected;  // lexicographically least minimum
};

SymDiffResult symmetric_differential_revise(const ModelSet& b, const ModelSet& mplus,
                                            const ModelSet& mminus, const FrFamily& fr);

// ── Postulate checking ──────────────────────────────────────────────────────

enum class Postulate {
    Success,
    Persistence,
    Inclusion,
    VacuousExpansion,
    VacuousRemoval,
    Lethargy,
    FiniteTemperance,
    FiniteRetainment,
    Circumspection,
};

const char* postulate_name(Postulate p);

struct OperatorRun {
    ModelSet base;       // mod(B) within the universe
    ModelSet positives;  // union of the positives' classes
    ModelSet negatives;
    ModelSet result;     // mod of the operator output
    FrFamily fr;
};

struct PostulateVerdict {
    Postulate postulate;
    bool pass;
    std::optional<std::size_t> witness;  // a model index demonstrating failure
    std::string note;
};

PostulateVerdict check_postulate(const OperatorRun& run, Postulate p);
std::vector<PostulateVerdict> check_postulates(const OperatorRun& run,
                                               const std::vector<Postulate>& which);

// Uniformity spot-checks on supplied input pairs: when the candidate
// structures agree (MinFRSups of the two reception targets, MaxFRSubs of the
// two eviction targets), the lexicographically-least selections must agree.
// True when the implication holds (vacuously true when the structures differ).
bool uniform_pair_reception(const ModelSet& t1, const ModelSet& t2, const FrFamily& fr);
bool uniform_pair_eviction(const ModelSet& t1, const ModelSet& t2, const FrFamily& fr);

// ── Exhaustive EL profile closure ───────────────────────────────────────────
// All achievable satisfaction bitmasks of EL concepts of depth ≤ d over the
// given pointed interpretations (bit i ↔ models[i]).  Covers the whole,
// infinite concept space: profiles are closed under the only EL operations
// (atoms, intersection, exists-lifting).
std::vector<ModelSet> el_profiles(const std::vector<PointedInterpretation>& models,
                                  const Signature& sig, std::size_t depth_bound);

// All reduced EL tree concepts over sig of role depth ≤ max_depth with at
// most max_branching existential children per node (children form antichains
// under subsumption), sorted by canonical text.  Up to equivalence this
// covers every satisfiable EL⊥ concept within those bounds.
std::vector<Concept> enumerate_reduced_el_trees(const Signature& sig, std::size_t max_depth,
                                                std::size_t max_branching);

// ── Bounded EL⊥ eviction search ─────────────────────────────────────────────
// Stand-in for general EL⊥ eviction (no closed form is available): enumerate
// reduced EL⊥ tree concepts over sig up to the given depth/branching, keep
// those subsumed by base and falsified by every negative, take the
// entailment-maximal ones and select the print-least.
Concept el_evict_search(const Concept& base, const std::vector<PointedInterpretation>& negatives,
                        const Signature& sig, std::size_t max_depth = 3,
                        std::size_t max_branching = 2);

}  // namespace mc

#endif
