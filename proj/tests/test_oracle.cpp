// test_oracle.cpp -- brute-force recognizers, equivalence and generators

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ietw/oracle.hpp"

using namespace ietw;
using fixtures::lang;
using fixtures::w;

TEST_CASE("oracle_language on known machines") {
    CHECK(oracle_language(fixtures::m_ab(), Mode::General, 4) == lang({"", "ab", "aabb"}));
    CHECK(oracle_language(fixtures::m_a(), Mode::InitEven, 1) == lang({"a"}));
    Ietwgfa cycle{{"s", "p"}, {"a"}, {Rule::epsilon("s", "p"), Rule::epsilon("p", "s")}, "s", {"p"}};
    CHECK(oracle_language(cycle, Mode::General, 2) == lang({""}));
}

TEST_CASE("equiv_up_to") {
    auto r = equiv_up_to(lang({"", "ab"}), lang({"ab"}), 4);
    CHECK_FALSE(r.equal);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->empty());
    CHECK(r.bound == 4);

    CHECK(equiv_up_to({}, {}, 3).equal);
    CHECK(equiv_up_to(lang({"aaaa"}), lang({}), 3).equal);

    auto a = lang({"a", "ba", "bb"});
    auto b = lang({"a", "bb", "ab"});
    auto ab = equiv_up_to(a, b, 5);
    auto ba = equiv_up_to(b, a, 5);
    CHECK(ab.counterexample == ba.counterexample);
    CHECK(*ab.counterexample == w("ab"));
    CHECK(equiv_up_to(a, a, 5).equal);
}

TEST_CASE("M_ab against G_ab") {
    auto m = oracle_language(fixtures::m_ab(), Mode::General, 6);
    CHECK(equiv_up_to(m, oracle_grammar_language(fixtures::g_ab(), 6), 6).equal);
    LinearGrammar just_ab{{"S"}, {"a", "b"}, {GrammarRule::terminal("S", w("ab"))}, "S"};
    auto r = equiv_up_to(oracle_language(fixtures::m_ab(), Mode::General, 4), oracle_grammar_language(just_ab, 4), 4);
    CHECK_FALSE(r.equal);
    CHECK(r.counterexample == std::optional<Word>(Word{}));
}

TEST_CASE("generators are deterministic and valid") {
    GenConfig cfg;
    cfg.seed = 17;
    CHECK(random_gfa(cfg) == random_gfa(cfg));
    CHECK(random_lg(cfg) == random_lg(cfg));
    CHECK(random_nfa(cfg, letters(2)) == random_nfa(cfg, letters(2)));

    cfg.max_rules = 0;
    auto empty = random_gfa(cfg);
    CHECK(empty.rules.empty());
    CHECK(validate_automaton(empty).empty());

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig c;
        c.seed = seed;
        auto m = random_gfa(c);
        CHECK(validate_automaton(m).empty());
        CHECK(m.states.size() <= 4);
        CHECK(m.rules.size() <= 6);
        CHECK_FALSE(m.finals.empty());
        CHECK(classify(m).max_lhs_len <= 3);
        CHECK(validate_grammar(random_lg(c)).empty());
        CHECK(is_even_linear(random_elg(c)).even);
        auto finite = random_acyclic_nfa(c, letters(2));
        CHECK(validate_automaton(finite).empty());
        CHECK(nfa_enumerate(finite, 8) == nfa_enumerate(finite, 12));
    }
}
