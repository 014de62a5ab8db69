#include "mc/concepts.hpp"

#include <algorithm>
#include <cctype>

namespace mc {

// ── Signature ───────────────────────────────────────────────────────────────

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    }
    return true;
}

static std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Signature::Signature(std::vector<std::string> concept_names, std::vector<std::string> role_names)
    : concept_names_(sorted_unique(std::move(concept_names))),
      role_names_(sorted_unique(std::move(role_names))) {
    for (const auto& n : concept_names_) {
        if (!is_identifier(n)) throw InputError("bad concept name: '" + n + "'");
    }
    for (const auto& n : role_names_) {
        if (!is_identifier(n)) throw InputError("bad role name: '" + n + "'");
        if (has_concept_name(n)) {
            throw InputError("name declared both as concept and role: '" + n + "'");
        }
    }
}

bool Signature::has_concept_name(const std::string& n) const {
    return std::binary_search(concept_names_.begin(), concept_names_.end(), n);
}

bool Signature::has_role_name(const std::string& n) const {
    return std::binary_search(role_names_.begin(), role_names_.end(), n);
}

bool Signature::contains(const Signature& other) const {
    return std::includes(concept_names_.begin(), concept_names_.end(),
                         other.concept_names_.begin(), other.concept_names_.end()) &&
           std::includes(role_names_.begin(), role_names_.end(),
                         other.role_names_.begin(), other.role_names_.end());
}

Signature Signature::united_with(const Signature& other) const {
    std::vector<std::string> cs = concept_names_, rs = role_names_;
    cs.insert(cs.end(), other.concept_names_.begin(), other.concept_names_.end());
    rs.insert(rs.end(), other.role_names_.begin(), other.role_names_.end());
    return Signature(std::move(cs), std::move(rs));
}

// ── Concept construction & normalization ────────────────────────────────────

static std::string render(Ctor ctor, const std::string& symbol,
                          const std::vector<Concept>& children) {
    switch (ctor) {
        case Ctor::Top: return "top";
        case Ctor::Bot: return "bot";
        case Ctor::Name: return symbol;
        case Ctor::Not: return "not " + children[0].text();
        case Ctor::Exists: return "(exists " + symbol + "." + children[0].text() + ")";
        case Ctor::Forall: return "(forall " + symbol + "." + children[0].text() + ")";
        case Ctor::And:
        case Ctor::Or: {
            const char* sep = ctor == Ctor::And ? " and " : " or ";
            std::string out = "(";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) out += sep;
                out += children[i].text();
            }
            out += ")";
            return out;
        }
    }
    return {};
}

Concept Concept::make(Ctor ctor, std::string symbol, std::vector<Concept> children) {
    auto n = std::make_shared<Node>();
    n->ctor = ctor;
    n->symbol = std::move(symbol);
    n->children = std::move(children);
    n->text = render(n->ctor, n->symbol, n->children);
    return Concept(std::move(n));
}

Concept Concept::top() {
    static const Concept t = make(Ctor::Top, "", {});
    return t;
}

Concept Concept::bot() {
    static const Concept b = make(Ctor::Bot, "", {});
    return b;
}

Concept Concept::name(const std::string& n) { return make(Ctor::Name, n, {}); }

Concept Concept::negation(const Concept& c) { return make(Ctor::Not, "", {c}); }

static Concept make_list(Ctor ctor, std::vector<Concept> parts) {
    const Ctor unit_ctor = ctor == Ctor::And ? Ctor::Top : Ctor::Bot;
    std::vector<Concept> flat;
    for (const auto& p : parts) {
        if (p.ctor() == ctor) {
            flat.insert(flat.end(), p.children().begin(), p.children().end());
        } else if (p.ctor() != unit_ctor) {
            flat.push_back(p);
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return ctor == Ctor::And ? Concept::top() : Concept::bot();
    if (flat.size() == 1) return flat[0];
    // flat is now sorted, unique and unit-free, so this recursion terminates.
    return ctor == Ctor::And ? Concept::conj(std::move(flat)) : Concept::disj(std::move(flat));
}

Concept Concept::conj(std::vector<Concept> parts) {
    // Normalize: flatten nested And, drop top, dedupe, sort.
    const bool already_flat = [&] {
        for (const auto& p : parts) {
            if (p.ctor() == Ctor::And || p.ctor() == Ctor::Top) return false;
        }
        return std::is_sorted(parts.begin(), parts.end()) &&
               std::adjacent_find(parts.begin(), parts.end()) == parts.end();
    }();
    if (!already_flat) return make_list(Ctor::And, std::move(parts));
    if (parts.empty()) return top();
    if (parts.size() == 1) return parts[0];
    return make(Ctor::And, "", std::move(parts));
}

Concept Concept::disj(std::vector<Concept> parts) {
    const bool already_flat = [&] {
        for (const auto& p : parts) {
            if (p.ctor() == Ctor::Or || p.ctor() == Ctor::Bot) return false;
        }
        return std::is_sorted(parts.begin(), parts.end()) &&
               std::adjacent_find(parts.begin(), parts.end()) == parts.end();
    }();
    if (!already_flat) return make_list(Ctor::Or, std::move(parts));
    if (parts.empty()) return bot();
    if (parts.size() == 1) return parts[0];
    return make(Ctor::Or, "", std::move(parts));
}

Concept Concept::exists(const std::string& role, const Concept& c) {
    return make(Ctor::Exists, role, {c});
}

Concept Concept::forall(const std::string& role, const Concept& c) {
    return make(Ctor::Forall, role, {c});
}

// ── Parser ──────────────────────────────────────────────────────────────────
// Recursive descent over a token stream.  Unicode operator symbols are
// rewritten to their ASCII keywords during tokenization.

namespace {

struct Token {
    enum Kind { Word, LParen, RParen, Dot, End } kind;
    std::string word;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (i_ < s_.size()) {
            const char c = s_[i_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i_;
            } else if (c == '(') {
                out.push_back({Token::LParen, "(", i_++});
            } else if (c == ')') {
                out.push_back({Token::RParen, ")", i_++});
            } else if (c == '.') {
                out.push_back({Token::Dot, ".", i_++});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                const std::size_t start = i_;
                while (i_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                    ++i_;
                }
                out.push_back({Token::Word, s_.substr(start, i_ - start), start});
            } else if (!try_unicode(out)) {
                throw ParseError(i_, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back({Token::End, "", s_.size()});
        return out;
    }

private:
    bool try_unicode(std::vector<Token>& out) {
        static const struct {
            const char* utf8;
            const char* keyword;
            Token::Kind kind;
        } aliases[] = {
            {"⊤", "top", Token::Word},    {"⊥", "bot", Token::Word},
            {"¬", "not", Token::Word},    {"⊓", "and", Token::Word},
            {"⊔", "or", Token::Word},     {"∃", "exists", Token::Word},
            {"∀", "forall", Token::Word},
        };
        for (const auto& a : aliases) {
            const std::size_t len = std::string(a.utf8).size();
            if (s_.compare(i_, len, a.utf8) == 0) {
                out.push_back({a.kind, a.keyword, i_});
                i_ += len;
                return true;
            }
        }
        return false;
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

    Concept run() {
        Concept c = parse_chain();
        expect(Token::End, "end of input");
        return c;
    }

private:
    const Token& cur() const { return toks_[i_]; }

    void expect(Token::Kind k, const char* what) {
        if (cur().kind != k) {
            throw ParseError(cur().pos, std::string("expected ") + what);
        }
        ++i_;
    }

    std::string expect_role() {
        if (cur().kind != Token::Word || !is_identifier(cur().word)) {
            throw ParseError(cur().pos, "expected role name");
        }
        const std::string role = cur().word;
        if (!sig_.has_role_name(role)) throw UndeclaredNameError(role);
        ++i_;
        return role;
    }

    // item ("and" item)* | item ("or" item)* — one connective per chain;
    // mixing requires parentheses.  "not" and the quantifiers bind tighter
    // than the connectives.
    Concept parse_chain() {
        std::vector<Concept> parts{parse_item()};
        if (cur().kind != Token::Word || (cur().word != "and" && cur().word != "or")) {
            return parts[0];
        }
        const std::string op = cur().word;
        while (cur().kind == Token::Word) {
            if (cur().word != op) {
                if (cur().word == "and" || cur().word == "or") {
                    throw ParseError(cur().pos, "mixed 'and'/'or' without parentheses");
                }
                break;
            }
            ++i_;
            parts.push_back(parse_item());
        }
        return op == "and" ? Concept::conj(std::move(parts)) : Concept::disj(std::move(parts));
    }

    Concept parse_item() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Word: {
                ++i_;
                if (t.word == "top") return Concept::top();
                if (t.word == "bot") return Concept::bot();
                if (t.word == "not") return Concept::negation(parse_item());
                if (t.word == "exists" || t.word == "forall") {
                    const std::string role = expect_role();
                    expect(Token::Dot, "'.'");
                    Concept body = parse_item();
                    return t.word == "exists" ? Concept::exists(role, body)
                                              : Concept::forall(role, body);
                }
                if (t.word == "and" || t.word == "or") {
                    throw ParseError(t.pos, "'" + t.word + "' without a left operand");
                }
                if (!sig_.has_concept_name(t.word)) throw UndeclaredNameError(t.word);
                return Concept::name(t.word);
            }
            case Token::LParen: {
                ++i_;
                Concept c = parse_chain();
                expect(Token::RParen, "')'");
                return c;
            }
            default:
                throw ParseError(t.pos, "expected a concept");
        }
    }

    std::vector<Token> toks_;
    const Signature& sig_;
    std::size_t i_ = 0;
};

}  // namespace

Concept parse_concept(const std::string& text, const Signature& sig) {
    return Parser(Lexer(text).run(), sig).run();
}

// ── Measures ────────────────────────────────────────────────────────────────

std::size_t depth(const Concept& c) {
    switch (c.ctor()) {
        case Ctor::Top:
        case Ctor::Bot:
        case Ctor::Name:
            return 0;
        case Ctor::Not:
            return depth(c.children()[0]);
        case Ctor::Exists:
        case Ctor::Forall:
            return 1 + depth(c.children()[0]);
        case Ctor::And:
        case Ctor::Or: {
            std::size_t m = 0;
            for (const auto& k : c.children()) m = std::max(m, depth(k));
            return m;
        }
    }
    return 0;
}

static void collect_names(const Concept& c, std::set<std::string>& cs, std::set<std::string>& rs) {
    switch (c.ctor()) {
        case Ctor::Name:
            cs.insert(c.symbol());
            break;
        case Ctor::Exists:
        case Ctor::Forall:
            rs.insert(c.symbol());
            break;
        default:
            break;
    }
    for (const auto& k : c.children()) collect_names(k, cs, rs);
}

Signature signature_of(const Concept& c) {
    std::set<std::string> cs, rs;
    collect_names(c, cs, rs);
    return Signature({cs.begin(), cs.end()}, {rs.begin(), rs.end()});
}

Dialect dialect_of(const Concept& c) {
    Dialect d = Dialect::EL;
    switch (c.ctor()) {
        case Ctor::Bot:
            d = Dialect::EL_BOT;
            break;
        case Ctor::Not:
        case Ctor::Or:
        case Ctor::Forall:
            return Dialect::ALC;
        default:
            break;
    }
    for (const auto& k : c.children()) {
        d = std::max(d, dialect_of(k));
        if (d == Dialect::ALC) break;
    }
    return d;
}

const char* dialect_name(Dialect d) {
    switch (d) {
        case Dialect::EL: return "EL";
        case Dialect::EL_BOT: return "EL_BOT";
        case Dialect::ALC: return "ALC";
    }
    return "?";
}

static void collect_subconcepts(const Concept& c, std::set<Concept>& out) {
    if (!out.insert(c).second) return;
    for (const auto& k : c.children()) collect_subconcepts(k, out);
}

std::set<Concept> subconcepts(const Concept& c) {
    std::set<Concept> out;
    collect_subconcepts(c, out);
    return out;
}

}  // namespace mc
