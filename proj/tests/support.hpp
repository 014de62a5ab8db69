#ifndef MC_TESTS_SUPPORT_HPP
#define MC_TESTS_SUPPORT_HPP

// Shared deterministic generators for the test binaries.

#include <random>
#include <string>
#include <vector>

#include "mc/instances.hpp"

namespace mc::testing {

inline std::size_t pick(std::mt19937& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Random concept of the given dialect with role depth ≤ depth.
inline Concept random_concept(std::mt19937& rng, const Signature& sig, std::size_t depth,
                              Dialect dialect) {
    const bool has_names = !sig.concept_names().empty();
    const bool has_roles = !sig.role_names().empty() && depth > 0;
    for (;;) {
        switch (pick(rng, 8)) {
            case 0:
                return Concept::top();
            case 1:
                if (dialect != Dialect::EL) return Concept::bot();
                break;
            case 2:
                if (has_names) {
                    return Concept::name(sig.concept_names()[pick(rng, sig.concept_names().size())]);
                }
                break;
            case 3:
                if (dialect == Dialect::ALC) {
                    return Concept::negation(random_concept(rng, sig, depth, dialect));
                }
                break;
            // Exactly two children in the connective cases keeps the
            // recursion subcritical (expected offspring < 1), so generated
            // concepts stay small with probability one.
            case 4: {
                std::vector<Concept> parts;
                for (std::size_t i = 0; i < 2; ++i) {
                    parts.push_back(random_concept(rng, sig, depth, dialect));
                }
                return Concept::conj(std::move(parts));
            }
            case 5:
                if (dialect == Dialect::ALC) {
                    std::vector<Concept> parts;
                    for (std::size_t i = 0; i < 2; ++i) {
                        parts.push_back(random_concept(rng, sig, depth, dialect));
                    }
                    return Concept::disj(std::move(parts));
                }
                break;
            case 6:
                if (has_roles) {
                    return Concept::exists(sig.role_names()[pick(rng, sig.role_names().size())],
                                           random_concept(rng, sig, depth - 1, dialect));
                }
                break;
            case 7:
                if (dialect == Dialect::ALC && has_roles) {
                    return Concept::forall(sig.role_names()[pick(rng, sig.role_names().size())],
                                           random_concept(rng, sig, depth - 1, dialect));
                }
                break;
        }
    }
}

// Random finite tree-shaped pointed interpretation, path-style element ids.
inline PointedInterpretation random_tree(std::mt19937& rng, const Signature& sig,
                                         std::size_t depth, std::size_t branching) {
    Interpretation interp;
    std::size_t counter = 0;
    auto build = [&](auto&& self, std::size_t remaining) -> std::string {
        const std::string id = "n" + std::to_string(counter++);
        interp.domain.push_back(id);
        for (const auto& a : sig.concept_names()) {
            if (pick(rng, 2) == 0) interp.concept_ext[a].insert(id);
        }
        if (remaining > 0) {
            const std::size_t kids = pick(rng, branching + 1);
            for (std::size_t i = 0; i < kids; ++i) {
                const auto& role = sig.role_names()[pick(rng, sig.role_names().size())];
                interp.role_ext[role].insert({id, self(self, remaining - 1)});
            }
        }
        return id;
    };
    build(build, depth);
    return PointedInterpretation{std::move(interp), "n0"};
}

// Random interpretation that need not be a tree (for satisfaction tests).
inline PointedInterpretation random_interp(std::mt19937& rng, const Signature& sig,
                                           std::size_t n_elems) {
    Interpretation interp;
    for (std::size_t i = 0; i < n_elems; ++i) interp.domain.push_back("m" + std::to_string(i));
    for (const auto& a : sig.concept_names()) {
        for (const auto& e : interp.domain) {
            if (pick(rng, 2) == 0) interp.concept_ext[a].insert(e);
        }
    }
    for (const auto& r : sig.role_names()) {
        for (const auto& e : interp.domain) {
            for (const auto& g : interp.domain) {
                if (pick(rng, 3) == 0) interp.role_ext[r].insert({e, g});
            }
        }
    }
    const std::string point = interp.domain[pick(rng, n_elems)];
    return PointedInterpretation{std::move(interp), point};
}

}  // namespace mc::testing

#endif
