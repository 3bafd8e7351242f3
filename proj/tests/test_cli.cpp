// test_cli.cpp -- command dispatch, exit codes and output bytes

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ietw/cli.hpp"
#include "ietw/text_format.hpp"

#include <sstream>

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(IETW_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ietw::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("accept") {
    CHECK(run({"accept", data("m_ab.txt"), "aabb"}).code == 0);
    CHECK(run({"accept", data("m_ab.txt"), "aab"}).code == 1);
    CHECK(run({"accept", data("m_ab.txt"), "_"}).out == "accepted\n");
    CHECK(run({"accept", data("m_abc.txt"), "aabbcc", "--mode", "alt"}).code == 0);
    CHECK(run({"accept", data("g_ab.txt"), "ab"}).code == 0);
    CHECK(run({"accept", data("a_star.txt"), "a a", "--tokens"}).code == 0);
    CHECK(run({"accept", data("m_ab.txt"), "abc"}).code == 2);
}

TEST_CASE("equiv example") {
    auto r = run({"equiv", data("m_ab.txt"), data("g_ab.txt"), "--max-len", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "equal up to 6\n");
    auto d = run({"equiv", data("m_ab.txt"), data("a_star.txt"), "--max-len", "3"});
    CHECK(d.code == 1);
    CHECK(d.out == "differ at a\n");
    auto j = run({"equiv", data("m_ab.txt"), data("a_star.txt"), "--max-len", "3", "--json"});
    CHECK(j.out == "{\"counterexample\":\"a\",\"equal\":false}\n");
}

TEST_CASE("enumerate example") {
    auto r = run({"enumerate", data("m_ab.txt"), "--max-len", "4", "--mode", "even", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"words\":[\"\",\"ab\",\"aabb\"]}\n");
    CHECK(run({"enumerate", data("m_ab.txt"), "--max-len", "2"}).out == "_\nab\n");
}

TEST_CASE("trace") {
    auto r = run({"trace", data("m_ab.txt"), "ab"});
    CHECK(r.code == 0);
    CHECK(r.out == "split: 1\n1: a s -> q [left] reads a\n2: q b -> s [right] reads b\naccepted\n");
    CHECK(run({"trace", data("m_ab.txt"), "ba"}).code == 1);
}

TEST_CASE("validate") {
    auto r = run({"validate", data("m_ab.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == "valid\nsimple: yes\nepsilon-free: yes\nmax-lhs: 2\n");
    auto bad = run({"validate", data("bad_rule.txt")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 6") != std::string::npos);
    CHECK(run({"validate", data("missing.txt")}).code == 2);
}

TEST_CASE("convert and restrict print parseable documents") {
    for (const char* to : {"lg", "sfa", "efree", "even-sfa", "init-even-sfa", "elg", "lift"}) {
        auto r = run({"convert", data("m_ab.txt"), "--to", to});
        INFO(to);
        CHECK(r.code == 0);
        CHECK_NOTHROW(ietw::parse_document(r.out));
    }
    auto g = run({"convert", data("g_ab.txt"), "--to", "gfa", "--mode-context", "init-even"});
    CHECK(g.code == 0);
    CHECK(run({"convert", data("m_ab.txt"), "--to", "gfa"}).code == 2);
    auto s = run({"restrict", data("m_ab.txt"), "--op", "sides", "--with", data("a_star.txt"), data("b_star.txt")});
    CHECK(s.code == 0);
    CHECK_NOTHROW(ietw::parse_ietwgfa(s.out));
    CHECK(run({"restrict", data("m_ab.txt"), "--op", "whole", "--with", data("a_star.txt"), data("b_star.txt")}).code == 2);
    auto mid = run({"restrict", data("m_ab.txt"), "--op", "middle", "--with", data("a_star.txt"), data("b_star.txt"),
                    data("b_star.txt")});
    CHECK(mid.code == 0);
    CHECK_NOTHROW(ietw::parse_nfa(mid.out));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate", data("m_ab.txt")}).code == 2);
    CHECK(run({"accept", data("m_ab.txt"), "ab", "--mode", "odd"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fuzz") {
    auto r = run({"fuzz", "--config", "seed=7", "max_states=3", "--rounds", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "rounds: 5, mismatches: 0\n");
    CHECK(run({"fuzz", "--config", "colour=3"}).code == 2);
    CHECK(run({"fuzz", "--config", "seed=7", "--rounds", "5"}).out == run({"fuzz", "--config", "seed=7", "--rounds", "5"}).out);
}
