#include "mc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace mc {

// ── ModelSet ────────────────────────────────────────────────────────────────

ModelSet ModelSet::full(std::size_t n) {
    ModelSet m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i);
    return m;
}

void ModelSet::set(std::size_t i, bool v) {
    if (v) {
        bits_[i / 64] |= (std::uint64_t{1} << (i % 64));
    } else {
        bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
}

std::size_t ModelSet::count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool ModelSet::empty() const {
    for (auto w : bits_) {
        if (w != 0) return false;
    }
    return true;
}

ModelSet ModelSet::operator&(const ModelSet& o) const {
    ModelSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

ModelSet ModelSet::operator|(const ModelSet& o) const {
    ModelSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

ModelSet ModelSet::operator^(const ModelSet& o) const {
    ModelSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ^ o.bits_[i];
    return r;
}

ModelSet ModelSet::minus(const ModelSet& o) const {
    ModelSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
}

ModelSet ModelSet::complement() const { return full(n_).minus(*this); }

bool ModelSet::subset_of(const ModelSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] & ~o.bits_[i]) return false;
    }
    return true;
}

bool ModelSet::intersects(const ModelSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] & o.bits_[i]) return true;
    }
    return false;
}

std::optional<std::size_t> ModelSet::first_difference(const ModelSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        const std::uint64_t d = bits_[i] ^ o.bits_[i];
        if (d != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(d));
    }
    return std::nullopt;
}

std::optional<std::size_t> ModelSet::first_member() const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(bits_[i]));
    }
    return std::nullopt;
}

bool ModelSet::lex_less(const ModelSet& o) const {
    const auto d = first_difference(o);
    return d.has_value() && !get(*d);
}

std::string ModelSet::to_string() const {
    std::string s;
    s.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) s += get(i) ? '1' : '0';
    return s;
}

// ── Universe enumeration ────────────────────────────────────────────────────

namespace {
constexpr double kLog2Cap = 1e18;  // sentinel: class count is astronomically large
}

double universe_log2_count(const Signature& sig, std::size_t k) {
    const double nc = static_cast<double>(sig.concept_names().size());
    const double nr = static_cast<double>(sig.role_names().size());
    double lg = nc;  // log2 of the level-0 class count
    for (std::size_t j = 0; j < k; ++j) {
        if (lg > 62.0) return kLog2Cap;
        lg = nc + nr * std::exp2(lg);
        if (lg > kLog2Cap) return kLog2Cap;
    }
    return lg;
}

namespace {

constexpr std::size_t kDefaultMaxClasses = 4096;

FiniteUniverse build_universe(const Signature& sig, std::size_t k, std::size_t max_classes) {
    const double lg = universe_log2_count(sig, k);
    if (lg > 62.0 || std::exp2(lg) > static_cast<double>(max_classes)) {
        throw BudgetError(lg, "universe enumeration would produce 2^" + std::to_string(lg) +
                                  " classes, above the budget of " + std::to_string(max_classes));
    }

    FiniteUniverse u;
    u.sig = sig;
    u.k = k;
    const std::size_t nc = sig.concept_names().size();
    const std::size_t nr = sig.role_names().size();

    // Level 0: one class per label set, no children.
    std::vector<UniverseClass> level0;
    for (unsigned mask = 0; mask < (1u << nc); ++mask) {
        level0.push_back(UniverseClass{mask, std::vector<std::vector<std::size_t>>(nr)});
    }
    u.levels.push_back(std::move(level0));

    // Level j+1: label set × per-role subset of level-j classes, in
    // deterministic (label, role-subset) order.
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t prev = u.levels[j].size();
        std::vector<UniverseClass> next;
        std::vector<std::vector<std::size_t>> child_sets(nr);
        std::function<void(unsigned, std::size_t)> roles = [&](unsigned mask, std::size_t ri) {
            if (ri == nr) {
                next.push_back(UniverseClass{mask, child_sets});
                return;
            }
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << prev); ++sub) {
                child_sets[ri].clear();
                for (std::size_t b = 0; b < prev; ++b) {
                    if ((sub >> b) & 1u) child_sets[ri].push_back(b);
                }
                roles(mask, ri + 1);
            }
            child_sets[ri].clear();
        };
        for (unsigned mask = 0; mask < (1u << nc); ++mask) roles(mask, 0);
        u.levels.push_back(std::move(next));
    }

    // Materialize one representative tree per top-level class.
    for (const auto& cls : u.levels[k]) {
        Interpretation interp;
        std::size_t counter = 0;
        std::function<std::string(std::size_t, const UniverseClass&)> emit =
            [&](std::size_t level, const UniverseClass& c) {
                const std::string id = "e" + std::to_string(counter++);
                interp.domain.push_back(id);
                for (std::size_t b = 0; b < nc; ++b) {
                    if ((c.label_mask >> b) & 1u) interp.concept_ext[sig.concept_names()[b]].insert(id);
                }
                for (std::size_t ri = 0; ri < nr; ++ri) {
                    for (std::size_t child : c.child_sets[ri]) {
                        const std::string cid = emit(level - 1, u.levels[level - 1][child]);
                        interp.role_ext[sig.role_names()[ri]].insert({id, cid});
                    }
                }
                return id;
            };
        emit(k, cls);
        u.models.push_back(PointedInterpretation{std::move(interp), "e0"});
    }
    return u;
}

}  // namespace

FiniteUniverse enumerate_universe(const Signature& sig, std::size_t k) {
    if (sig.concept_names().size() > 2 || sig.role_names().size() > 1 || k > 2) {
        throw BudgetError(universe_log2_count(sig, k),
                          "universe enumeration is capped at |concept names| <= 2, "
                          "|role names| <= 1, k <= 2; pass an explicit budget to override");
    }
    return build_universe(sig, k, kDefaultMaxClasses);
}

FiniteUniverse enumerate_universe(const Signature& sig, std::size_t k, std::size_t max_classes) {
    return build_universe(sig, k, max_classes);
}

std::size_t FiniteUniverse::class_of(const PointedInterpretation& pi) const {
    pi.validate(&sig);
    if (!is_tree_shaped(pi)) throw NotTreeShapedError("class_of: interpretation is not a tree");
    if (tree_depth(pi) > k) {
        throw InputError("class_of: tree depth exceeds the universe depth bound");
    }
    const std::size_t nc = sig.concept_names().size();
    const std::size_t nr = sig.role_names().size();

    std::function<std::size_t(const std::string&, std::size_t)> idx_at =
        [&](const std::string& e, std::size_t level) -> std::size_t {
        unsigned mask = 0;
        const auto labels = pi.interp.labels_at(e, &sig);
        for (std::size_t b = 0; b < nc; ++b) {
            if (labels.count(sig.concept_names()[b])) mask |= (1u << b);
        }
        std::vector<std::vector<std::size_t>> child_sets(nr);
        for (std::size_t ri = 0; ri < nr; ++ri) {
            std::set<std::size_t> kids;
            for (const auto& s : pi.interp.successors(e, sig.role_names()[ri])) {
                kids.insert(idx_at(s, level - 1));
            }
            child_sets[ri].assign(kids.begin(), kids.end());
        }
        for (std::size_t i = 0; i < levels[level].size(); ++i) {
            if (levels[level][i].label_mask == mask && levels[level][i].child_sets == child_sets) {
                return i;
            }
        }
        throw InputError("class_of: no matching universe class (internal inconsistency)");
    };
    return idx_at(pi.point, k);
}

ModelSet FiniteUniverse::class_mask(const std::vector<PointedInterpretation>& trees) const {
    ModelSet m(size());
    for (const auto& t : trees) m.set(class_of(t));
    return m;
}

// ── mod-sets ────────────────────────────────────────────────────────────────

ModelSet satisfying_set(const Concept& c, const FiniteUniverse& u) {
    ModelSet m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (model_check(u.models[i], c)) m.set(i);
    }
    return m;
}

ModelSet mod_set(const Concept& c, const FiniteUniverse& u) {
    if (depth(c) > u.k) {
        throw InputError("mod_set: concept depth exceeds the universe depth bound");
    }
    if (!u.sig.contains(signature_of(c))) {
        throw InputError("mod_set: concept uses names outside the universe signature");
    }
    return satisfying_set(c, u);
}

// ── FR families ─────────────────────────────────────────────────────────────

bool FrFamily::contains(const ModelSet& m) const {
    if (m.size() != universe_size) return false;
    if (all_subsets) return true;
    for (const auto& s : sets) {
        if (s == m) return true;
    }
    return false;
}

namespace {

// Close a generating family of bitmask vectors under pairwise intersection.
std::vector<ModelSet> intersection_closure(std::vector<ModelSet> gen) {
    std::set<std::string> seen;
    std::vector<ModelSet> out;
    for (const auto& g : gen) {
        if (seen.insert(g.to_string()).second) out.push_back(g);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            ModelSet m = out[i] & out[j];
            if (seen.insert(m.to_string()).second) out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ModelSet& a, const ModelSet& b) { return a.lex_less(b); });
    return out;
}

}  // namespace

FrFamily fr_family(const FiniteUniverse& u, Dialect dialect) {
    FrFamily fam;
    fam.universe_size = u.size();

    if (dialect == Dialect::ALC) {
        // Every union of classes is definable in the bounded ALC fragment.
        if (u.size() > 16) {
            fam.all_subsets = true;
            return fam;
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
            ModelSet m(u.size());
            for (std::size_t b = 0; b < u.size(); ++b) {
                if ((mask >> b) & 1u) m.set(b);
            }
            fam.sets.push_back(m);
        }
        std::sort(fam.sets.begin(), fam.sets.end(),
                  [](const ModelSet& a, const ModelSet& b) { return a.lex_less(b); });
        return fam;
    }

    // EL / EL⊥ fragment of depth-≤k concepts: per level, the achievable
    // satisfaction vectors over that level's classes are generated by atoms,
    // ⊤, (⊥,) and exists-lifts of the previous level, closed under ∩.
    const std::size_t nc = u.sig.concept_names().size();
    const std::size_t nr = u.sig.role_names().size();
    std::vector<ModelSet> profiles;
    for (std::size_t level = 0; level <= u.k; ++level) {
        const auto& classes = u.levels[level];
        const std::size_t n = classes.size();
        std::vector<ModelSet> gen;
        gen.push_back(ModelSet::full(n));
        if (dialect == Dialect::EL_BOT) gen.push_back(ModelSet(n));
        for (std::size_t b = 0; b < nc; ++b) {
            ModelSet atom(n);
            for (std::size_t i = 0; i < n; ++i) {
                if ((classes[i].label_mask >> b) & 1u) atom.set(i);
            }
            gen.push_back(atom);
        }
        if (level > 0) {
            for (std::size_t ri = 0; ri < nr; ++ri) {
                for (const auto& v : profiles) {  // previous level's vectors
                    ModelSet lifted(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        for (std::size_t child : classes[i].child_sets[ri]) {
                            if (v.get(child)) {
                                lifted.set(i);
                                break;
                            }
                        }
                    }
                    gen.push_back(lifted);
                }
            }
        }
        profiles = intersection_closure(std::move(gen));
    }
    fam.sets = std::move(profiles);
    return fam;
}

std::vector<ModelSet> min_fr_sups(const ModelSet& m, const FrFamily& fr) {
    if (fr.all_subsets) return {m};
    std::vector<ModelSet> cand;
    for (const auto& y : fr.sets) {
        if (m.subset_of(y)) cand.push_back(y);
    }
    std::vector<ModelSet> out;
    for (const auto& y : cand) {
        bool minimal = true;
        for (const auto& z : cand) {
            if (!(z == y) && z.subset_of(y)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(y);
    }
    return out;
}

std::vector<ModelSet> max_fr_subs(const ModelSet& m, const FrFamily& fr) {
    if (fr.all_subsets) return {m};
    std::vector<ModelSet> cand;
    for (const auto& y : fr.sets) {
        if (y.subset_of(m)) cand.push_back(y);
    }
    std::vector<ModelSet> out;
    for (const auto& y : cand) {
        bool maximal = true;
        for (const auto& z : cand) {
            if (!(z == y) && y.subset_of(z)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(y);
    }
    return out;
}

// ── chi and the symmetric-differential operator ─────────────────────────────

std::vector<ModelSet> chi_min(const ModelSet& b, const ModelSet& mplus,
                              const ModelSet& mminus, const FrFamily& fr) {
    if (fr.all_subsets) {
        if (mplus.intersects(mminus)) {
            throw RealizabilityError("chi_min: positives and negatives overlap");
        }
        // Unique minimum: incur exactly the forced symmetric difference.
        return {b.minus(mminus) | mplus};
    }
    std::vector<ModelSet> cand;
    for (const auto& y : fr.sets) {
        if (mplus.subset_of(y) && !mminus.intersects(y)) cand.push_back(y);
    }
    if (cand.empty()) {
        throw RealizabilityError("chi_min: no finitely representable candidate contains the "
                                 "positives and avoids the negatives");
    }
    std::vector<ModelSet> out;
    for (const auto& y : cand) {
        const ModelSet dy = b ^ y;
        bool minimal = true;
        for (const auto& z : cand) {
            const ModelSet dz = b ^ z;
            if (!(dz == dy) && dz.subset_of(dy)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(y);
    }
    return out;
}

SymDiffResult symmetric_differential_revise(const ModelSet& b, const ModelSet& mplus,
                                            const ModelSet& mminus, const FrFamily& fr) {
    SymDiffResult res;
    if (mplus.subset_of(b)) {
        res.case_used = 1;
        res.minima = chi_min(b, mplus, mminus | b.complement(), fr);
    } else if (!mminus.intersects(b)) {
        res.case_used = 2;
        res.minima = chi_min(b, mplus | b, mminus, fr);
    } else {
        res.case_used = 3;
        res.minima = chi_min(b, mplus, mminus, fr);
    }
    res.selected = res.minima.front();
    for (const auto& m : res.minima) {
        if (m.lex_less(res.selected)) res.selected = m;
    }
    return res;
}

// ── Postulates ──────────────────────────────────────────────────────────────

const char* postulate_name(Postulate p) {
    switch (p) {
        case Postulate::Success: return "success";
        case Postulate::Persistence: return "persistence";
        case Postulate::Inclusion: return "inclusion";
        case Postulate::VacuousExpansion: return "vacuous-expansion";
        case Postulate::VacuousRemoval: return "vacuous-removal";
        case Postulate::Lethargy: return "lethargy";
        case Postulate::FiniteTemperance: return "finite-temperance";
        case Postulate::FiniteRetainment: return "finite-retainment";
        case Postulate::Circumspection: return "circumspection";
    }
    return "?";
}

namespace {

PostulateVerdict pass_verdict(Postulate p, std::string note = {}) {
    return PostulateVerdict{p, true, std::nullopt, std::move(note)};
}

PostulateVerdict fail_verdict(Postulate p, const ModelSet& witnesses, std::string note = {}) {
    return PostulateVerdict{p, false, witnesses.first_member(), std::move(note)};
}

// Circumspection: a finitely representable W distinct from the result Z is a
// violation when W = (base \ X⁻) ∪ X⁺ for admissible extra removals X⁻ and
// additions X⁺, i.e. when base ∩ Z ⊆ W ∩ base ⊆ base \ M⁻ and
// M⁺ \ base ⊆ W \ base ⊆ Z \ base.
bool circumspection_box(const OperatorRun& r, const ModelSet& w) {
    const ModelSet wb = w & r.base;
    const ModelSet wout = w.minus(r.base);
    return (r.base & r.result).subset_of(wb) && wb.subset_of(r.base.minus(r.negatives)) &&
           r.positives.minus(r.base).subset_of(wout) && wout.subset_of(r.result.minus(r.base));
}

PostulateVerdict check_circumspection(const OperatorRun& r) {
    const Postulate p = Postulate::Circumspection;
    const std::string note = "fragment-relative";
    if (r.fr.all_subsets) {
        // Every subset is representable, so the postulate holds exactly when
        // the admissible box around the result is empty or {result}.
        const ModelSet low_in = r.base & r.result;
        const ModelSet high_in = r.base.minus(r.negatives);
        const ModelSet low_out = r.positives.minus(r.base);
        const ModelSet high_out = r.result.minus(r.base);
        if (!low_in.subset_of(high_in) || !low_out.subset_of(high_out)) {
            return pass_verdict(p, note);  // box empty: nothing to compare
        }
        if (low_in == high_in && low_out == high_out) {
            const ModelSet only = low_in | low_out;
            if (only == r.result) return pass_verdict(p, note);
            return fail_verdict(p, only ^ r.result, note);
        }
        ModelSet w = high_in | low_out;  // one corner of the non-singleton box
        if (w == r.result) w = low_in | high_out;
        return fail_verdict(p, w ^ r.result, note);
    }
    for (const auto& w : r.fr.sets) {
        if (w == r.result) continue;
        if (circumspection_box(r, w)) return fail_verdict(p, w ^ r.result, note);
    }
    return pass_verdict(p, note);
}

}  // namespace

PostulateVerdict check_postulate(const OperatorRun& r, Postulate p) {
    switch (p) {
        case Postulate::Success: {
            const ModelSet bad = r.positives.minus(r.result) | (r.negatives & r.result);
            return bad.empty() ? pass_verdict(p) : fail_verdict(p, bad);
        }
        case Postulate::Persistence: {
            const ModelSet bad = r.base.minus(r.result);
            return bad.empty() ? pass_verdict(p) : fail_verdict(p, bad);
        }
        case Postulate::Inclusion: {
            const ModelSet bad = r.result.minus(r.base);
            return bad.empty() ? pass_verdict(p) : fail_verdict(p, bad);
        }
        case Postulate::VacuousExpansion: {
            if (!r.positives.subset_of(r.base)) return pass_verdict(p, "antecedent not met");
            const ModelSet bad = r.result.minus(r.base);
            return bad.empty() ? pass_verdict(p) : fail_verdict(p, bad);
        }
        case Postulate::VacuousRemoval: {
            if (r.negatives.intersects(r.base)) return pass_verdict(p, "antecedent not met");
            const ModelSet bad = r.base.minus(r.result);
            return bad.empty() ? pass_verdict(p) : fail_verdict(p, bad);
        }
        case Postulate::Lethargy: {
            if (!r.positives.subset_of(r.base) || r.negatives.intersects(r.base)) {
                return pass_verdict(p, "antecedent not met");
            }
            const ModelSet bad = r.base ^ r.result;
            return bad.empty() ? pass_verdict(p) : fail_verdict(p, bad);
        }
        case Postulate::FiniteTemperance: {
            // Violated by a representable M' with base ∪ positives ⊆ M' ⊂ result.
            const std::string note = "fragment-relative";
            const ModelSet lo = r.base | r.positives;
            if (r.fr.all_subsets) {
                if (lo.subset_of(r.result) && !(lo == r.result)) {
                    return fail_verdict(p, r.result.minus(lo), note);
                }
                return pass_verdict(p, note);
            }
            for (const auto& m : r.fr.sets) {
                if (lo.subset_of(m) && m.subset_of(r.result) && !(m == r.result)) {
                    return fail_verdict(p, r.result.minus(m), note);
                }
            }
            return pass_verdict(p, note);
        }
        case Postulate::FiniteRetainment: {
            // Violated by a representable M' with result ⊂ M' ⊆ base \ negatives.
            const std::string note = "fragment-relative";
            const ModelSet hi = r.base.minus(r.negatives);
            if (r.fr.all_subsets) {
                if (r.result.subset_of(hi) && !(r.result == hi)) {
                    return fail_verdict(p, hi.minus(r.result), note);
                }
                return pass_verdict(p, note);
            }
            for (const auto& m : r.fr.sets) {
                if (r.result.subset_of(m) && m.subset_of(hi) && !(m == r.result)) {
                    return fail_verdict(p, m.minus(r.result), note);
                }
            }
            return pass_verdict(p, note);
        }
        case Postulate::Circumspection:
            return check_circumspection(r);
    }
    throw InputError("unknown postulate");
}

std::vector<PostulateVerdict> check_postulates(const OperatorRun& run,
                                               const std::vector<Postulate>& which) {
    std::vector<PostulateVerdict> out;
    for (auto p : which) out.push_back(check_postulate(run, p));
    return out;
}

namespace {

ModelSet lex_least(const std::vector<ModelSet>& v) {
    ModelSet best = v.front();
    for (const auto& m : v) {
        if (m.lex_less(best)) best = m;
    }
    return best;
}

}  // namespace

bool uniform_pair_reception(const ModelSet& t1, const ModelSet& t2, const FrFamily& fr) {
    const auto s1 = min_fr_sups(t1, fr);
    const auto s2 = min_fr_sups(t2, fr);
    if (s1 != s2) return true;  // antecedent not met
    if (s1.empty()) return true;  // no candidates on either side
    return lex_least(s1) == lex_least(s2);
}

bool uniform_pair_eviction(const ModelSet& t1, const ModelSet& t2, const FrFamily& fr) {
    const auto s1 = max_fr_subs(t1, fr);
    const auto s2 = max_fr_subs(t2, fr);
    if (s1 != s2) return true;
    if (s1.empty()) return true;  // no candidates on either side
    return lex_least(s1) == lex_least(s2);
}

// ── Exhaustive EL profile closure over arbitrary models ─────────────────────

std::vector<ModelSet> el_profiles(const std::vector<PointedInterpretation>& models,
                                  const Signature& sig, std::size_t depth_bound) {
    // Element space: every element of every model, so exists-lifting can look
    // below the points.
    struct Elem {
        std::size_t model;
        std::string id;
    };
    std::vector<Elem> elems;
    std::vector<std::size_t> point_index(models.size());
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        for (const auto& e : models[mi].interp.domain) {
            if (e == models[mi].point) point_index[mi] = elems.size();
            elems.push_back(Elem{mi, e});
        }
    }
    const std::size_t n = elems.size();

    std::vector<ModelSet> gen;
    gen.push_back(ModelSet::full(n));
    for (const auto& a : sig.concept_names()) {
        ModelSet atom(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (models[elems[i].model].interp.extension_of(a).count(elems[i].id)) atom.set(i);
        }
        gen.push_back(atom);
    }
    std::vector<ModelSet> profiles = intersection_closure(gen);

    for (std::size_t d = 0; d < depth_bound; ++d) {
        std::vector<ModelSet> next = gen;
        for (const auto& role : sig.role_names()) {
            for (const auto& v : profiles) {
                ModelSet lifted(n);
                for (std::size_t i = 0; i < n; ++i) {
                    for (const auto& s : models[elems[i].model].interp.successors(elems[i].id, role)) {
                        std::size_t si = 0;
                        while (elems[si].model != elems[i].model || elems[si].id != s) ++si;
                        if (v.get(si)) {
                            lifted.set(i);
                            break;
                        }
                    }
                }
                next.push_back(lifted);
            }
        }
        profiles = intersection_closure(std::move(next));
    }

    // Project onto the points.
    std::set<std::string> seen;
    std::vector<ModelSet> out;
    for (const auto& v : profiles) {
        ModelSet proj(models.size());
        for (std::size_t mi = 0; mi < models.size(); ++mi) {
            if (v.get(point_index[mi])) proj.set(mi);
        }
        if (seen.insert(proj.to_string()).second) out.push_back(proj);
    }
    std::sort(out.begin(), out.end(),
              [](const ModelSet& a, const ModelSet& b) { return a.lex_less(b); });
    return out;
}

// ── Bounded EL⊥ eviction search ─────────────────────────────────────────────

std::vector<Concept> enumerate_reduced_el_trees(const Signature& sig, std::size_t max_depth,
                                                std::size_t max_branching) {
    std::vector<Concept> prev;
    if (max_depth > 0) prev = enumerate_reduced_el_trees(sig, max_depth - 1, max_branching);

    // Existential child options: one per (role, subtree).
    std::vector<Concept> options;
    for (const auto& role : sig.role_names()) {
        for (const auto& t : prev) options.push_back(Concept::exists(role, t));
    }

    std::set<Concept> out;
    const std::size_t nc = sig.concept_names().size();
    std::vector<Concept> chosen;
    std::function<void(std::size_t, unsigned)> pick = [&](std::size_t from, unsigned label_mask) {
        // Keep only antichains: a child subsumed by a sibling is redundant.
        bool reduced = true;
        for (std::size_t i = 0; i < chosen.size() && reduced; ++i) {
            for (std::size_t j = 0; j < chosen.size() && reduced; ++j) {
                if (i != j && el_subsumes(chosen[i], chosen[j])) reduced = false;
            }
        }
        if (reduced) {
            std::vector<Concept> parts;
            for (std::size_t b = 0; b < nc; ++b) {
                if ((label_mask >> b) & 1u) parts.push_back(Concept::name(sig.concept_names()[b]));
            }
            for (const auto& c : chosen) parts.push_back(c);
            out.insert(Concept::conj(std::move(parts)));
        }
        if (chosen.size() == max_branching || !reduced) return;
        for (std::size_t i = from; i < options.size(); ++i) {
            chosen.push_back(options[i]);
            pick(i + 1, label_mask);
            chosen.pop_back();
        }
    };
    for (unsigned mask = 0; mask < (1u << nc); ++mask) {
        chosen.clear();
        pick(0, mask);
    }
    return {out.begin(), out.end()};
}

Concept el_evict_search(const Concept& base, const std::vector<PointedInterpretation>& negatives,
                        const Signature& sig, std::size_t max_depth, std::size_t max_branching) {
    std::vector<Concept> kept;
    for (const auto& cand : enumerate_reduced_el_trees(sig, max_depth, max_branching)) {
        if (!el_subsumes(cand, base)) continue;  // must stay within mod(base)
        bool falsifies_all = true;
        for (const auto& neg : negatives) {
            if (model_check(neg, cand)) {
                falsifies_all = false;
                break;
            }
        }
        if (falsifies_all) kept.push_back(cand);
    }
    if (kept.empty()) {
        // ⊥ always works in EL⊥: empty mod-set is within mod(base) and
        // falsified everywhere.
        return Concept::bot();
    }
    // Entailment-maximal candidates (weakest, i.e. retaining the most models).
    std::vector<Concept> maximal;
    for (const auto& c : kept) {
        bool is_max = true;
        for (const auto& d : kept) {
            if (el_subsumes(c, d) && !el_subsumes(d, c)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(c);
    }
    Concept best = maximal.front();
    for (const auto& c : maximal) {
        if (c.text() < best.text()) best = c;
    }
    return best;
}

}  // namespace mc
