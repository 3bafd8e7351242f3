// cli.cpp -- subcommands over the text formats

#include "ietw/cli.hpp"

#include "ietw/conversions.hpp"
#include "ietw/oracle.hpp"
#include "ietw/restrictions.hpp"
#include "ietw/simulation.hpp"
#include "ietw/text_format.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ietw {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <typename T>
const T& expect(const Document& d, const std::string& path, const char* kind) {
    if (const auto* v = std::get_if<T>(&d))
        return *v;
    throw InputError(path + ": expected a document of type " + kind);
}

Mode mode_of(const std::string& text) {
    auto m = parse_mode(text);
    if (!m)
        throw InputError("unknown mode '" + text + "'");
    return *m;
}

Language language_of(const Document& d, Mode mode, std::size_t max_len) {
    if (const auto* m = std::get_if<Ietwgfa>(&d))
        return enumerate_language(*m, mode, max_len);
    if (const auto* n = std::get_if<Nfa>(&d))
        return nfa_enumerate(*n, max_len);
    return lg_enumerate(std::get<LinearGrammar>(d), max_len);
}

/// Symbols are concatenated when all are single characters.
std::string json_word(const Word& w) {
    for (const auto& s : w) {
        if (s.size() != 1)
            return join(w, " ");
    }
    return join(w, "");
}

ValidationReport validation_of(const Document& d) {
    if (const auto* m = std::get_if<Ietwgfa>(&d))
        return validate_automaton(*m);
    if (const auto* n = std::get_if<Nfa>(&d))
        return validate_automaton(*n);
    return validate_grammar(std::get<LinearGrammar>(d));
}

struct Options {
    std::string file;
    std::string file2;
    std::string word;
    std::string mode = "general";
    std::string modes;
    std::string to;
    std::string context = "general";
    std::string op;
    std::vector<std::string> with;
    std::vector<std::string> config;
    std::size_t max_len = 0;
    std::size_t rounds = 20;
    bool tokens = false;
    bool json = false;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const Options& o, std::ostream& out) {
    auto d = load(o.file);
    auto r = validation_of(d);
    if (!r.empty()) {
        for (const auto& v : r)
            out << "violation: " << v.message << "\n";
        out << "invalid\n";
        return kFalse;
    }
    out << "valid\n";
    if (const auto* m = std::get_if<Ietwgfa>(&d)) {
        auto c = classify(*m);
        out << "simple: " << yes_no(c.simple) << "\n";
        out << "epsilon-free: " << yes_no(c.epsilon_free) << "\n";
        out << "max-lhs: " << c.max_lhs_len << "\n";
    } else if (const auto* g = std::get_if<LinearGrammar>(&d)) {
        auto e = is_even_linear(*g);
        out << "even-linear: " << yes_no(e.even) << "\n";
        if (e.offending_rule)
            out << "offending rule: " << to_string(g->rules[*e.offending_rule]) << "\n";
    } else {
        out << "epsilon-free: " << yes_no(std::get<Nfa>(d).epsilon_free()) << "\n";
    }
    return kTrue;
}

int cmd_accept(const Options& o, std::ostream& out) {
    auto d = load(o.file);
    require_valid(validation_of(d), o.file);
    auto w = parse_word(o.word, o.tokens);
    bool ok = false;
    if (const auto* m = std::get_if<Ietwgfa>(&d))
        ok = accepts(*m, w, mode_of(o.mode));
    else if (const auto* n = std::get_if<Nfa>(&d))
        ok = nfa_accepts(*n, w);
    else
        ok = lg_accepts(std::get<LinearGrammar>(d), w);
    out << (ok ? "accepted" : "rejected") << "\n";
    return ok ? kTrue : kFalse;
}

int cmd_trace(const Options& o, std::ostream& out) {
    auto d = load(o.file);
    const auto& m = expect<Ietwgfa>(d, o.file, "ietwgfa");
    require_valid(validate_automaton(m), o.file);
    auto t = trace(m, parse_word(o.word, o.tokens), mode_of(o.mode));
    if (!t) {
        out << "rejected\n";
        return kFalse;
    }
    out << "split: " << t->split << "\n";
    for (std::size_t i = 0; i < t->moves.size(); ++i) {
        const auto& mv = t->moves[i];
        const char* dir = mv.assigned == Direction::Left ? "left" : mv.assigned == Direction::Right ? "right" : "none";
        out << i + 1 << ": " << to_string(m.rules[mv.rule_index]) << " [" << dir << "] reads "
            << format_word(mv.consumed) << "\n";
    }
    out << "accepted\n";
    return kTrue;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    auto d = load(o.file);
    require_valid(validation_of(d), o.file);
    auto l = language_of(d, mode_of(o.mode), o.max_len);
    if (o.json) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : l)
            words.push_back(json_word(w));
        out << nlohmann::json{{"words", words}}.dump() << "\n";
        return kTrue;
    }
    for (const auto& w : l)
        out << format_word(w) << "\n";
    return kTrue;
}

int cmd_convert(const Options& o, std::ostream& out) {
    auto d = load(o.file);
    require_valid(validation_of(d), o.file);
    const auto context = mode_of(o.context);
    if (context != Mode::General && context != Mode::InitEven)
        throw InputError("--mode-context takes general or init-even");
    const bool init_even = context == Mode::InitEven;
    auto machine = [&]() -> const Ietwgfa& { return expect<Ietwgfa>(d, o.file, "ietwgfa"); };
    Document result;
    if (o.to == "lg") {
        result = init_even ? init_even_to_elg(machine()) : gfa_to_lg(machine());
    } else if (o.to == "gfa") {
        const auto& g = expect<LinearGrammar>(d, o.file, "lg");
        result = init_even ? elg_to_gfa_init_even(g) : lg_to_gfa(g);
    } else if (o.to == "sfa") {
        result = gfa_to_sfa(machine());
    } else if (o.to == "efree") {
        result = remove_epsilon(machine(), false);
    } else if (o.to == "even-sfa") {
        result = even_to_efree_sfa(machine());
    } else if (o.to == "init-even-sfa") {
        result = init_even_to_sfa(machine());
    } else if (o.to == "elg") {
        result = init_even_to_elg(machine());
    } else if (o.to == "lift") {
        result = lift_even_to_init_even(machine());
    } else {
        throw InputError("unknown conversion target '" + o.to + "'");
    }
    out << serialize(result);
    return kTrue;
}

int cmd_restrict(const Options& o, std::ostream& out) {
    auto d = load(o.file);
    const auto& m = expect<Ietwgfa>(d, o.file, "ietwgfa");
    std::vector<Nfa> with;
    for (const auto& path : o.with) {
        auto doc = load(path);
        with.push_back(expect<Nfa>(doc, path, "nfa"));
    }
    auto need = [&](std::size_t n) {
        if (with.size() != n)
            throw InputError("--op " + o.op + " needs " + std::to_string(n) + " --with files");
    };
    if (o.op == "sides") {
        need(2);
        out << serialize(restrict_sides(m, with[0], with[1]));
    } else if (o.op == "whole") {
        need(1);
        out << serialize(restrict_whole(m, with[0]));
    } else if (o.op == "finite-prefix") {
        need(2);
        out << serialize(restrict_finite_prefix(m, finite_language(with[0]), with[1]));
    } else if (o.op == "middle") {
        need(3);
        out << serialize(restrict_middle(m, with[0], with[1], with[2]));
    } else {
        throw InputError("unknown restriction '" + o.op + "'");
    }
    return kTrue;
}

int cmd_equiv(const Options& o, std::ostream& out) {
    auto d1 = load(o.file);
    auto d2 = load(o.file2);
    require_valid(validation_of(d1), o.file);
    require_valid(validation_of(d2), o.file2);
    Mode m1 = Mode::General;
    Mode m2 = Mode::General;
    if (!o.modes.empty()) {
        auto comma = o.modes.find(',');
        m1 = mode_of(o.modes.substr(0, comma));
        m2 = comma == std::string::npos ? m1 : mode_of(o.modes.substr(comma + 1));
    }
    auto r = equiv_up_to(language_of(d1, m1, o.max_len), language_of(d2, m2, o.max_len), o.max_len);
    if (o.json) {
        nlohmann::json j{{"equal", r.equal}, {"counterexample", nullptr}};
        if (r.counterexample)
            j["counterexample"] = json_word(*r.counterexample);
        out << j.dump() << "\n";
    } else if (r.equal) {
        out << "equal up to " << o.max_len << "\n";
    } else {
        out << "differ at " << format_word(*r.counterexample) << "\n";
    }
    return r.equal ? kTrue : kFalse;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
    GenConfig cfg;
    std::size_t max_len = 4;
    const std::map<std::string, std::size_t*> sizes{{"max_states", &cfg.max_states},
                                                     {"max_rules", &cfg.max_rules},
                                                     {"max_segment_len", &cfg.max_segment_len},
                                                     {"alphabet_size", &cfg.alphabet_size},
                                                     {"max_len", &max_len}};
    for (const auto& kv : o.config) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw InputError("config entry '" + kv + "' is not KEY=VALUE");
        auto key = kv.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoull(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("config value for '" + key + "' is not a number");
        }
        if (key == "seed")
            cfg.seed = value;
        else if (auto it = sizes.find(key); it != sizes.end())
            *it->second = value;
        else
            throw InputError("unknown config key '" + key + "'");
    }
    if (cfg.max_states == 0 || cfg.alphabet_size == 0)
        throw InputError("max_states and alphabet_size must be positive");

    std::size_t mismatches = 0;
    const auto base = cfg.seed;
    for (std::size_t round = 0; round < o.rounds; ++round) {
        cfg.seed = base + round;
        auto m = random_gfa(cfg);
        auto fail = [&](const std::string& what) {
            ++mismatches;
            out << "seed " << cfg.seed << ": " << what << "\n";
        };
        for (auto mode : {Mode::General, Mode::Alternating, Mode::Even, Mode::InitEven}) {
            if (enumerate_language(m, mode, max_len) != oracle_language(m, mode, max_len))
                fail("simulation and oracle disagree in mode " + std::string(to_string(mode)));
        }
        auto general = enumerate_language(m, Mode::General, max_len);
        if (lg_enumerate(gfa_to_lg(m), max_len) != general)
            fail("gfa_to_lg changes the language");
        if (enumerate_language(remove_epsilon(gfa_to_sfa(m), true), Mode::General, max_len) != general)
            fail("normalization changes the language");
    }
    out << "rounds: " << o.rounds << ", mismatches: " << mismatches << "\n";
    return mismatches == 0 ? kTrue : kFalse;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Input-erasing two-way finite automata", "ietw"};
    app.require_subcommand(1);
    Options o;
    auto add_mode = [&](CLI::App* sub) { sub->add_option("--mode", o.mode, "general, alt, even or init-even"); };

    auto* validate = app.add_subcommand("validate", "Check a document and classify it");
    validate->add_option("file", o.file)->required();

    auto* accept = app.add_subcommand("accept", "Decide membership of a word");
    accept->add_option("file", o.file)->required();
    accept->add_option("word", o.word)->required();
    add_mode(accept);
    accept->add_flag("--tokens", o.tokens, "Word is whitespace-separated symbols");

    auto* tr = app.add_subcommand("trace", "Print a shortest accepting computation");
    tr->add_option("file", o.file)->required();
    tr->add_option("word", o.word)->required();
    add_mode(tr);
    tr->add_flag("--tokens", o.tokens, "Word is whitespace-separated symbols");

    auto* en = app.add_subcommand("enumerate", "List accepted words up to a length");
    en->add_option("file", o.file)->required();
    en->add_option("--max-len", o.max_len)->required();
    add_mode(en);
    en->add_flag("--json", o.json);

    auto* cv = app.add_subcommand("convert", "Convert between machines and grammars");
    cv->add_option("file", o.file)->required();
    cv->add_option("--to", o.to, "lg, gfa, sfa, efree, even-sfa, init-even-sfa, elg or lift")->required();
    cv->add_option("--mode-context", o.context, "general or init-even; picks the lg/gfa construction");

    auto* rs = app.add_subcommand("restrict", "Product with restricting NFAs");
    rs->add_option("file", o.file)->required();
    rs->add_option("--op", o.op, "sides, whole, finite-prefix or middle")->required();
    rs->add_option("--with", o.with)->required();

    auto* eq = app.add_subcommand("equiv", "Compare two languages up to a length");
    eq->add_option("file1", o.file)->required();
    eq->add_option("file2", o.file2)->required();
    eq->add_option("--max-len", o.max_len)->required();
    eq->add_option("--modes", o.modes, "MODE or MODE1,MODE2 for machine documents");
    eq->add_flag("--json", o.json);

    auto* fz = app.add_subcommand("fuzz", "Differential checks on random machines");
    fz->add_option("--config", o.config, "KEY=VALUE entries");
    fz->add_option("--rounds", o.rounds);

    std::vector<std::string> storage{"ietw"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kTrue : kUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(o, out);
        if (accept->parsed())
            return cmd_accept(o, out);
        if (tr->parsed())
            return cmd_trace(o, out);
        if (en->parsed())
            return cmd_enumerate(o, out);
        if (cv->parsed())
            return cmd_convert(o, out);
        if (rs->parsed())
            return cmd_restrict(o, out);
        if (eq->parsed())
            return cmd_equiv(o, out);
        if (fz->parsed())
            return cmd_fuzz(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace ietw
