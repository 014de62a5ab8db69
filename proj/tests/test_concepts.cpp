#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace mc;

static const Signature kSig({"A", "B"}, {"r", "s"});

TEST_CASE("signature ordering and validation") {
    Signature s({"B", "A", "B"}, {"s", "r"});
    CHECK(s.concept_names() == std::vector<std::string>{"A", "B"});
    CHECK(s.role_names() == std::vector<std::string>{"r", "s"});
    CHECK(s.has_concept_name("A"));
    CHECK(!s.has_concept_name("r"));
    CHECK_THROWS_AS(Signature({"A"}, {"A"}), InputError);
    CHECK_THROWS_AS(Signature({"1bad"}, {}), InputError);
    CHECK(Signature({"A"}, {}).united_with(Signature({"B"}, {"r"})) == Signature({"A", "B"}, {"r"}));
    CHECK(kSig.contains(Signature({"A"}, {"s"})));
    CHECK(!Signature({"A"}, {}).contains(kSig));
}

TEST_CASE("parsing the basic forms") {
    CHECK(parse_concept("top", kSig).ctor() == Ctor::Top);
    CHECK(parse_concept("bot", kSig).ctor() == Ctor::Bot);
    CHECK(parse_concept("A", kSig).text() == "A");

    const Concept c = parse_concept("exists r. exists r. exists r. top", kSig);
    CHECK(c.ctor() == Ctor::Exists);
    CHECK(depth(c) == 3);
    CHECK(c.text() == "(exists r.(exists r.(exists r.top)))");

    const Concept d = parse_concept("B and (exists r.(A and B))", kSig);
    CHECK(d.ctor() == Ctor::And);
    REQUIRE(d.children().size() == 2);
    CHECK(d.children()[1].text() == "B");
    CHECK(d.children()[0].ctor() == Ctor::Exists);
}

TEST_CASE("unicode aliases") {
    CHECK(parse_concept("⊤", kSig) == parse_concept("top", kSig));
    CHECK(parse_concept("∃r.⊥", kSig) == parse_concept("exists r.bot", kSig));
    CHECK(parse_concept("(¬A ⊓ B)", kSig) == parse_concept("(not A and B)", kSig));
    CHECK(parse_concept("(A ⊔ B)", kSig) == parse_concept("(A or B)", kSig));
    CHECK(parse_concept("∀s.A", kSig) == parse_concept("forall s.A", kSig));
}

TEST_CASE("parse errors carry positions; names are checked") {
    CHECK_THROWS_AS(parse_concept("exists r", kSig), ParseError);
    CHECK_THROWS_AS(parse_concept("(A and )", kSig), ParseError);
    CHECK_THROWS_AS(parse_concept("A and B or A", kSig), ParseError);  // mixed chain
    CHECK_THROWS_AS(parse_concept("C", kSig), UndeclaredNameError);
    CHECK_THROWS_AS(parse_concept("exists q.A", kSig), UndeclaredNameError);
    CHECK_THROWS_AS(parse_concept("exists A.B", kSig), UndeclaredNameError);
    try {
        parse_concept("(A and and B)", kSig);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("normalization: flatten, sort, dedupe, units") {
    CHECK(parse_concept("(B and A and B)", kSig).text() == "(A and B)");
    CHECK(parse_concept("(A and (B and A))", kSig).text() == "(A and B)");
    CHECK(parse_concept("(A and top)", kSig).text() == "A");
    CHECK(parse_concept("(A or bot)", kSig).text() == "A");
    CHECK(Concept::conj({}).ctor() == Ctor::Top);
    CHECK(Concept::disj({}).ctor() == Ctor::Bot);
    CHECK(Concept::conj({Concept::name("A")}).text() == "A");
    // No semantic simplification.
    CHECK(parse_concept("(A and not A)", kSig).ctor() == Ctor::And);
}

TEST_CASE("round trip: parse after print is the identity") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 300; ++i) {
        const Concept c = mc::testing::random_concept(rng, kSig, 3, Dialect::ALC);
        CHECK(parse_concept(c.text(), kSig) == c);
    }
}

TEST_CASE("grouping parentheses and quantifier binding") {
    CHECK(parse_concept("(A)", kSig) == parse_concept("A", kSig));
    CHECK(parse_concept("((A and B))", kSig).text() == "(A and B)");
    // Quantifiers bind tighter than connectives.
    CHECK(parse_concept("exists r.A and B", kSig) ==
          parse_concept("((exists r.A) and B)", kSig));
    CHECK(parse_concept("not A and B", kSig) == parse_concept("((not A) and B)", kSig));
}

TEST_CASE("measures") {
    CHECK(depth(parse_concept("A", kSig)) == 0);
    CHECK(depth(parse_concept("(A and exists r.exists s.B)", kSig)) == 2);
    CHECK(depth(parse_concept("not forall r.A", kSig)) == 1);

    const Signature so = signature_of(parse_concept("(A and exists r.B)", kSig));
    CHECK(so == Signature({"A", "B"}, {"r"}));

    CHECK(dialect_of(parse_concept("exists r.A", kSig)) == Dialect::EL);
    CHECK(dialect_of(parse_concept("(A and bot)", kSig)) == Dialect::EL_BOT);
    CHECK(dialect_of(parse_concept("not A", kSig)) == Dialect::ALC);
    CHECK(dialect_of(parse_concept("(A or B)", kSig)) == Dialect::ALC);
    CHECK(dialect_of(parse_concept("forall r.top", kSig)) == Dialect::ALC);
    CHECK(std::string(dialect_name(Dialect::EL_BOT)) == "EL_BOT");
}

TEST_CASE("subconcepts") {
    const Concept c = parse_concept("(A and exists r.B)", kSig);
    const auto subs = subconcepts(c);
    CHECK(subs.size() == 4);  // whole, A, exists r.B, B
    CHECK(subs.count(parse_concept("B", kSig)) == 1);
    CHECK(subs.count(c) == 1);
}

TEST_CASE("equal normalized concepts print identically") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Concept c = mc::testing::random_concept(rng, kSig, 2, Dialect::ALC);
        std::vector<Concept> parts(c.ctor() == Ctor::And ? c.children()
                                                         : std::vector<Concept>{c});
        std::shuffle(parts.begin(), parts.end(), rng);
        CHECK(Concept::conj(parts).text() == Concept::conj({c}).text());
    }
}
