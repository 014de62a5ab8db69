#include "mc/characteristic.hpp"

#include <map>

namespace mc {

// Flattened "atoms ⊓ grouped existentials" view of a satisfiable EL⊥ concept.
namespace {

struct Flat {
    std::set<std::string> atoms;                          // S
    std::map<std::string, std::vector<Concept>> by_role;  // T with children C_r^l
};

Flat flatten(const Concept& c) {
    Flat f;
    auto add = [&](const Concept& part) {
        switch (part.ctor()) {
            case Ctor::Top:
                break;
            case Ctor::Name:
                f.atoms.insert(part.symbol());
                break;
            case Ctor::Exists:
                f.by_role[part.symbol()].push_back(part.children()[0]);
                break;
            default:
                throw DialectError("dagger: not an EL⊥ conjunct: " + part.text());
        }
    };
    if (c.ctor() == Ctor::And) {
        for (const auto& k : c.children()) add(k);
    } else {
        add(c);
    }
    return f;
}

Concept translate(const Concept& c, const Signature& sig) {
    Flat f = flatten(c);
    std::vector<Concept> parts;
    for (const auto& a : f.atoms) parts.push_back(Concept::name(a));
    for (const auto& a : sig.concept_names()) {
        if (!f.atoms.count(a)) parts.push_back(Concept::negation(Concept::name(a)));
    }
    for (const auto& [role, kids] : f.by_role) {
        std::vector<Concept> translated;
        for (const auto& k : kids) translated.push_back(translate(k, sig));
        for (const auto& t : translated) parts.push_back(Concept::exists(role, t));
        parts.push_back(Concept::forall(role, Concept::disj(translated)));
    }
    for (const auto& r : sig.role_names()) {
        if (!f.by_role.count(r)) parts.push_back(Concept::forall(r, Concept::bot()));
    }
    return Concept::conj(std::move(parts));
}

}  // namespace

Concept dagger(const Concept& c, const Signature& sig) {
    if (dialect_of(c) == Dialect::ALC) {
        throw DialectError("dagger expects an EL⊥ concept, got: " + c.text());
    }
    if (!el_bot_satisfiable(c)) {
        throw UnsatisfiableConceptError("dagger of unsatisfiable concept: " + c.text());
    }
    if (!sig.contains(signature_of(c))) {
        throw InputError("dagger: signature does not cover the concept's names");
    }
    return translate(c, sig);
}

Concept dagger_of_tree(const PointedInterpretation& pi, const Signature& sig) {
    return dagger(concept_of_tree(pi), sig);
}

}  // namespace mc
