// test_restrictions.cpp -- product constructions against decomposition oracles

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "ietw/conversions.hpp"
#include "ietw/oracle.hpp"
#include "ietw/restrictions.hpp"
#include "ietw/simulation.hpp"

using namespace ietw;
using fixtures::lang;
using fixtures::w;

namespace {

const std::set<Symbol> ab{"a", "b"};

Nfa sigma_star(const std::set<Symbol>& alphabet) {
    Nfa n{{"i"}, alphabet, {}, "i", {"i"}};
    for (const auto& a : alphabet)
        n.rules.push_back({"i", a, "i"});
    return n;
}

Nfa plus(const std::set<Symbol>& alphabet, const Symbol& x) {
    return Nfa{{"i", "f"}, alphabet, {{"i", x, "f"}, {"f", x, "f"}}, "i", {"f"}};
}

Nfa odd_length(const std::set<Symbol>& alphabet) {
    Nfa n{{"e", "o"}, alphabet, {}, "e", {"o"}};
    for (const auto& a : alphabet) {
        n.rules.push_back({"e", a, "o"});
        n.rules.push_back({"o", a, "e"});
    }
    return n;
}

Ietwgfa random_simple(std::uint64_t seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.alphabet_size = 2;
    cfg.max_rules = 8;
    auto m = random_gfa(cfg);
    return remove_epsilon(gfa_to_sfa(m), true);
}

/// Seeds whose machine accepts something beyond the empty word at the test bound.
std::vector<std::uint64_t> lively_seeds(std::size_t count, std::size_t len) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t seed = 0; out.size() < count; ++seed) {
        if (enumerate_language(random_simple(seed), Mode::General, len).size() > 1)
            out.push_back(seed);
    }
    return out;
}

GenConfig nfa_cfg(std::uint64_t seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_states = 3;
    cfg.max_rules = 4;
    return cfg;
}

constexpr std::size_t bound = 6;

} // namespace

TEST_CASE("sides on M_ab") {
    auto m = fixtures::m_ab();
    auto out = restrict_sides(m, fixtures::star(ab, "a"), fixtures::star(ab, "b"));
    CHECK(validate_automaton(out).empty());
    CHECK(classify(out).simple);
    CHECK(enumerate_language(out, Mode::General, 4) == lang({"", "ab", "aabb"}));
    auto eps_only = restrict_sides(m, fixtures::finite(ab, {""}), fixtures::star(ab, "b"));
    CHECK(enumerate_language(eps_only, Mode::General, 4) == lang({""}));
}

TEST_CASE("sides with Sigma* on both sides keeps the language") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto m = random_simple(seed);
        auto out = restrict_sides(m, sigma_star(m.alphabet), sigma_star(m.alphabet));
        INFO("seed " << seed);
        CHECK(enumerate_language(out, Mode::General, bound) == enumerate_language(m, Mode::General, bound));
    }
}

TEST_CASE("whole on M_ab") {
    auto m = fixtures::m_ab();
    auto out = restrict_whole(m, fixtures::finite(ab, {"ab", "aabb"}));
    CHECK(classify(out).simple);
    CHECK(enumerate_language(out, Mode::General, bound) == lang({"ab", "aabb"}));
    CHECK(enumerate_language(restrict_whole(m, odd_length(ab)), Mode::General, bound).empty());
}

TEST_CASE("finite prefix on M_ab") {
    auto m = fixtures::m_ab();
    auto out = restrict_finite_prefix(m, {w("a"), w("aa")}, plus(ab, "b"));
    CHECK(validate_automaton(out).empty());
    CHECK(nfa_enumerate(out, 4) == lang({"ab", "aabb"}));
    CHECK(nfa_enumerate(restrict_finite_prefix(m, {}, plus(ab, "b")), bound).empty());
    CHECK(nfa_enumerate(restrict_finite_prefix(m, {w("")}, sigma_star(ab)), 4) == lang({""}));
}

TEST_CASE("middle on M_ab") {
    auto m = fixtures::m_ab();
    // The middle part is read to the right of the head, so it can only hold b's.
    auto ab_mid = restrict_middle(m, fixtures::star(ab, "a"), fixtures::finite(ab, {"ab"}), fixtures::star(ab, "b"));
    CHECK(validate_automaton(ab_mid).empty());
    CHECK(nfa_enumerate(ab_mid, bound) ==
          oracle_middle(m, fixtures::star(ab, "a"), fixtures::finite(ab, {"ab"}), fixtures::star(ab, "b"), bound, bound));
    CHECK(nfa_enumerate(ab_mid, bound).empty());
    auto bs = restrict_middle(m, fixtures::star(ab, "a"), fixtures::star(ab, "b"), fixtures::star(ab, "b"));
    CHECK(nfa_enumerate(bs, 4) == lang({"", "b", "bb", "bbb", "bbbb"}));
    auto eps = restrict_middle(m, fixtures::finite(ab, {""}), fixtures::star(ab, "a"), fixtures::finite(ab, {""}));
    CHECK(nfa_enumerate(eps, 4) == lang({""}));
    Nfa empty{{"i"}, ab, {}, "i", {}};
    CHECK(nfa_enumerate(restrict_middle(m, fixtures::star(ab, "a"), empty, fixtures::star(ab, "b")), bound).empty());
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(restrict_sides(fixtures::m_abc(), sigma_star({"a", "b", "c"}), sigma_star({"a", "b", "c"})),
                    PreconditionError);
    Ietwgfa long_rule{{"s"}, ab, {Rule::right("s", w("ab"), "s")}, "s", {"s"}};
    CHECK_THROWS_AS(restrict_whole(long_rule, sigma_star(ab)), PreconditionError);
    CHECK_THROWS_AS(restrict_whole(fixtures::m_ab(), sigma_star({"a", "b", "c"})), PreconditionError);
    CHECK_THROWS_AS(finite_language(sigma_star(ab)), PreconditionError);
    CHECK(finite_language(fixtures::finite(ab, {"a", "ab"})) == FiniteLanguage{w("a"), w("ab")});
}

TEST_CASE("random machines match the decomposition oracles") {
    std::size_t nonempty = 0;
    for (auto seed : lively_seeds(30, bound)) {
        auto m = random_simple(seed);
        REQUIRE(classify(m).simple);
        REQUIRE(classify(m).epsilon_free);
        auto a = random_nfa(nfa_cfg(seed * 3 + 1), m.alphabet);
        auto b = random_nfa(nfa_cfg(seed * 3 + 2), m.alphabet);
        auto fa = random_acyclic_nfa(nfa_cfg(seed * 5 + 3), m.alphabet);
        auto fc = random_acyclic_nfa(nfa_cfg(seed * 5 + 4), m.alphabet);
        INFO("seed " << seed);

        CHECK(enumerate_language(restrict_sides(m, a, b), Mode::General, bound) == oracle_sides(m, a, b, bound));
        CHECK(enumerate_language(restrict_whole(m, a), Mode::General, bound) == oracle_whole(m, a, bound));

        auto prefixes = finite_language(fa);
        auto fp = restrict_finite_prefix(m, prefixes, b);
        CHECK(validate_automaton(fp).empty());
        CHECK(nfa_enumerate(fp, bound) == oracle_finite_prefix(m, prefixes, b, bound));

        auto mid = restrict_middle(m, fa, b, fc);
        CHECK(validate_automaton(mid).empty());
        CHECK(nfa_enumerate(mid, bound) == oracle_middle(m, fa, b, fc, bound, fa.states.size() + fc.states.size()));
        nonempty += !oracle_sides(m, a, b, bound).empty();
    }
    CHECK(nonempty >= 10);
}

TEST_CASE("enlarging the restrictor never shrinks the output") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto m = random_simple(seed);
        auto a = random_nfa(nfa_cfg(seed + 100), m.alphabet);
        auto wider = a;
        wider.finals = wider.states;
        auto narrow = enumerate_language(restrict_whole(m, a), Mode::General, bound);
        auto wide = enumerate_language(restrict_whole(m, wider), Mode::General, bound);
        INFO("seed " << seed);
        CHECK(std::includes(wide.begin(), wide.end(), narrow.begin(), narrow.end(), ShortLex{}));
    }
}
