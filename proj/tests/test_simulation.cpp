// test_simulation.cpp -- moves, modes, traces and enumeration

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ietw/oracle.hpp"
#include "ietw/simulation.hpp"

using namespace ietw;
using fixtures::lang;
using fixtures::w;

TEST_CASE("apply_rule") {
    auto m = fixtures::m_ab();
    auto c = initial_configuration(m, w("ab"), 1, Mode::General);
    auto c1 = apply_rule(c, m.rules[0], Direction::Left);
    REQUIRE(c1);
    CHECK(c1->a == 0);
    CHECK(c1->b == 1);
    CHECK(c1->state == "q");
    auto c2 = apply_rule(*c1, m.rules[1], Direction::Right);
    REQUIRE(c2);
    CHECK(c2->a == 0);
    CHECK(c2->b == 2);
    CHECK(c2->state == "s");
    CHECK(is_accepting(m, *c2));
    CHECK_FALSE(apply_rule(c, m.rules[1], Direction::Left));
}

TEST_CASE("apply_rule enforces alternation") {
    Ietwgfa m{{"s"}, {"a"}, {Rule::right("s", w("a"), "s")}, "s", {"s"}};
    auto c = initial_configuration(m, w("aa"), 0, Mode::Alternating);
    auto c1 = apply_rule(c, m.rules[0], Direction::Right);
    REQUIRE(c1);
    CHECK_FALSE(apply_rule(*c1, m.rules[0], Direction::Right));
}

TEST_CASE("membership of the a^n b^n machine") {
    auto m = fixtures::m_ab();
    CHECK(accepts(m, w("aabb"), Mode::General));
    CHECK_FALSE(accepts(m, w("aab"), Mode::General));
    CHECK(accepts(m, w("aabb"), Mode::Even));
    CHECK_THROWS_AS(accepts(m, w("c"), Mode::General), InputError);
}

TEST_CASE("witness languages") {
    CHECK(accepts(fixtures::m_a(), w("a"), Mode::InitEven));
    CHECK_FALSE(accepts(fixtures::m_a(), w("a"), Mode::Even));
    CHECK(accepts(fixtures::m_abc(), w("aabbcc"), Mode::Alternating));
    CHECK(accepts(fixtures::m_abc(), w("abccc"), Mode::Alternating));
    CHECK_FALSE(accepts(fixtures::m_abc(), w("aabcc"), Mode::Alternating));
    Ietwgfa aa{{"s", "q", "f"}, {"a"}, {Rule::left(w("a"), "s", "q"), Rule::right("q", w("a"), "f")}, "s", {"f"}};
    CHECK(enumerate_language(aa, Mode::Even, 4) == lang({"aa"}));
}

TEST_CASE("trace") {
    auto t = trace(fixtures::m_ab(), w("ab"), Mode::General);
    REQUIRE(t);
    CHECK(t->split == 1);
    REQUIRE(t->moves.size() == 2);
    CHECK(t->moves[0] == TraceMove{0, Direction::Left, w("a")});
    CHECK(t->moves[1] == TraceMove{1, Direction::Right, w("b")});
    CHECK_FALSE(trace(fixtures::m_a(), w(""), Mode::General));

    auto abc = trace(fixtures::m_abc(), w("abc"), Mode::Alternating);
    REQUIRE(abc);
    auto end = replay(fixtures::m_abc(), w("abc"), Mode::Alternating, *abc);
    REQUIRE(end);
    CHECK(is_accepting(fixtures::m_abc(), *end));
}

TEST_CASE("enumerate_language") {
    auto m = fixtures::m_ab();
    CHECK(enumerate_language(m, Mode::General, 4) == lang({"", "ab", "aabb"}));
    CHECK(enumerate_language(m, Mode::Even, 4) == lang({"", "ab", "aabb"}));
    // An initialized even computation has an odd number of moves; M_ab only makes even-length ones.
    CHECK(enumerate_language(m, Mode::InitEven, 4).empty());
    CHECK(enumerate_language(m, Mode::Alternating, 6) == lang({"", "ab", "aabb", "aaabbb"}));
}

TEST_CASE("epsilon cycles terminate") {
    Ietwgfa m{{"s", "p"}, {"a"}, {Rule::epsilon("s", "p"), Rule::epsilon("p", "s")}, "s", {"p"}};
    for (auto mode : {Mode::General, Mode::Alternating, Mode::InitEven})
        CHECK(enumerate_language(m, mode, 3) == lang({""}));
    // Reaching p always takes an odd number of moves.
    CHECK(enumerate_language(m, Mode::Even, 3).empty());
}

static bool subset(const Language& a, const Language& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end(), ShortLex{});
}

TEST_CASE("mode containment and trace replay on random machines") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        auto m = random_gfa(cfg);
        auto general = enumerate_language(m, Mode::General, 5);
        auto alt = enumerate_language(m, Mode::Alternating, 5);
        auto even = enumerate_language(m, Mode::Even, 5);
        auto init = enumerate_language(m, Mode::InitEven, 5);
        CHECK(subset(even, alt));
        CHECK(subset(alt, general));
        CHECK(subset(init, general));
        for (auto mode : {Mode::General, Mode::Alternating, Mode::Even, Mode::InitEven}) {
            for (const auto& word : enumerate_language(m, mode, 4)) {
                auto t = trace(m, word, mode);
                REQUIRE(t);
                auto end = replay(m, word, mode, *t);
                REQUIRE(end);
                CHECK(is_accepting(m, *end));
            }
        }
    }
}

TEST_CASE("simulation agrees with the oracle") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        auto m = random_gfa(cfg);
        for (auto mode : {Mode::General, Mode::Alternating, Mode::Even, Mode::InitEven})
            CHECK(enumerate_language(m, mode, 4) == oracle_language(m, mode, 4));
    }
}
