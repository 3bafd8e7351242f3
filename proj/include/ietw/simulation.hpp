// simulation.hpp -- configurations, computation modes and membership for IETWGFAs

#pragma once

#include "ietw/core.hpp"

#include <optional>

namespace ietw {

enum class Mode : std::uint8_t { General, Alternating, Even, InitEven };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Where a computation stands with respect to its mode's constraints.
///
/// `last` is the assigned direction of the previous move (Neutral before any
/// constrained move). `pending` holds the read length of the first move of an
/// unfinished even pair. For InitEven, `initialized` turns true after the free
/// first move.
struct ModePhase {
    Mode mode = Mode::General;
    bool initialized = true;
    Direction last = Direction::Neutral;
    std::optional<std::size_t> pending;

    friend bool operator==(const ModePhase&, const ModePhase&) = default;
};

ModePhase initial_phase(Mode mode);
bool is_accepting_phase(const ModePhase& phase);

/// True when a move in `phase` must be given a direction (epsilon rules then
/// count as left or right moves).
bool phase_needs_direction(const ModePhase& phase);

/// Phase after a move with the given assigned direction and read length, or
/// nothing when the mode forbids that move.
std::optional<ModePhase> advance(const ModePhase& phase, Direction assigned, std::size_t read_len);

/// The word is fixed; w[a..b) is the erased region around the head.
struct Configuration {
    Word word;
    std::size_t a = 0;
    std::size_t b = 0;
    StateId state;
    ModePhase phase;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration initial_configuration(const Ietwgfa& m, const Word& w, std::size_t split, Mode mode);

/// Applies `r` as a move with direction `dir`. Returns nothing when the state,
/// the input or the mode does not allow the move.
std::optional<Configuration> apply_rule(const Configuration& c, const Rule& r, Direction dir);

bool is_accepting(const Ietwgfa& m, const Configuration& c);

struct TraceMove {
    std::size_t rule_index = 0;
    Direction assigned = Direction::Neutral;
    Word consumed;

    friend bool operator==(const TraceMove&, const TraceMove&) = default;
};

struct Trace {
    std::size_t split = 0;
    std::vector<TraceMove> moves;

    friend bool operator==(const Trace&, const Trace&) = default;
};

bool accepts(const Ietwgfa& m, const Word& w, Mode mode);

/// Membership with the head initially placed before w[split].
bool accepts_from(const Ietwgfa& m, const Word& w, std::size_t split, Mode mode);

/// A shortest accepting computation; ties go to the smaller split, then the
/// smaller rule index, then a left assignment for epsilon moves.
std::optional<Trace> trace(const Ietwgfa& m, const Word& w, Mode mode);

/// Replays a trace through apply_rule; returns the final configuration or nothing if a move is illegal.
std::optional<Configuration> replay(const Ietwgfa& m, const Word& w, Mode mode, const Trace& t);

Language enumerate_language(const Ietwgfa& m, Mode mode, std::size_t max_len);

} // namespace ietw
