#ifndef MC_CONCEPTS_HPP
#define MC_CONCEPTS_HPP

// Concept ASTs over a finite signature: the concrete grammar, structural
// normalization, and syntactic measures (depth, signature, dialect).
//
// Normal form maintained by all factories:
//   - And/Or lists are flattened, deduplicated and sorted by canonical print;
//   - identity elements are dropped (top inside and, bot inside or);
//   - the empty conjunction is top, the empty disjunction is bot;
//   - singleton lists collapse to their only member.
// No semantic simplification happens here (e.g. (A and (not A)) stays as
// written); equivalence lives in the relations module.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mc/errors.hpp"

namespace mc {

// ── Signature ───────────────────────────────────────────────────────────────
// Finite, disjoint, lexicographically ordered sets of concept and role names.

class Signature {
public:
    Signature() = default;
    // Sorts and deduplicates; throws InputError if the two sets overlap or a
    // name is not an identifier ([A-Za-z][A-Za-z0-9_]*).
    Signature(std::vector<std::string> concept_names, std::vector<std::string> role_names);

    const std::vector<std::string>& concept_names() const { return concept_names_; }
    const std::vector<std::string>& role_names() const { return role_names_; }

    bool has_concept_name(const std::string& n) const;
    bool has_role_name(const std::string& n) const;
    bool contains(const Signature& other) const;
    Signature united_with(const Signature& other) const;

    bool operator==(const Signature& o) const = default;

private:
    std::vector<std::string> concept_names_;
    std::vector<std::string> role_names_;
};

bool is_identifier(const std::string& s);

// ── Concept ─────────────────────────────────────────────────────────────────

enum class Ctor { Top, Bot, Name, Not, And, Or, Exists, Forall };

enum class Dialect { EL, EL_BOT, ALC };

class Concept {
public:
    Concept() : Concept(top()) {}

    static Concept top();
    static Concept bot();
    static Concept name(const std::string& n);
    static Concept negation(const Concept& c);
    static Concept conj(std::vector<Concept> parts);
    static Concept disj(std::vector<Concept> parts);
    static Concept exists(const std::string& role, const Concept& c);
    static Concept forall(const std::string& role, const Concept& c);

    Ctor ctor() const { return node_->ctor; }
    // Concept name (Name) or role name (Exists/Forall).
    const std::string& symbol() const { return node_->symbol; }
    // One child for Not/Exists/Forall; two or more for And/Or; none otherwise.
    const std::vector<Concept>& children() const { return node_->children; }

    // Canonical, fully parenthesized text (cached at construction).
    const std::string& text() const { return node_->text; }

    bool operator==(const Concept& o) const { return node_ == o.node_ || text() == o.text(); }
    bool operator<(const Concept& o) const { return text() < o.text(); }

private:
    struct Node {
        Ctor ctor;
        std::string symbol;
        std::vector<Concept> children;
        std::string text;
    };
    explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Concept make(Ctor ctor, std::string symbol, std::vector<Concept> children);

    std::shared_ptr<const Node> node_;
};

// ── Grammar ─────────────────────────────────────────────────────────────────
//   concept := item ("and" item)* | item ("or" item)*
//   item    := "top" | "bot" | name | "not" item | "(" concept ")"
//            | "exists" role "." item | "forall" role "." item
// One connective per chain; mixing "and"/"or" requires parentheses.
// Unicode aliases accepted: ⊤ ⊥ ¬ ⊓ ⊔ ∃ ∀.
// Throws ParseError / UndeclaredNameError.
Concept parse_concept(const std::string& text, const Signature& sig);

inline std::string print_concept(const Concept& c) { return c.text(); }

// ── Measures ────────────────────────────────────────────────────────────────

// Role depth: Exists/Forall add one, And/Or take the max, leaves are 0.
std::size_t depth(const Concept& c);

// Exactly the concept and role names occurring in c.
Signature signature_of(const Concept& c);

// Smallest dialect admitting c (EL < EL_BOT < ALC).
Dialect dialect_of(const Concept& c);

const char* dialect_name(Dialect d);

// All occurring subconcepts, including c itself.
std::set<Concept> subconcepts(const Concept& c);

}  // namespace mc

#endif
