#pragma once

// Synchronization: reset words and thresholds, word ranks, the stability
// relation, and the strongly-connected-or-synchronizing dichotomy for
// primitive automata.
//
// Witnesses are deterministic everywhere: shortest first, then
// lexicographically least by letter index; state choices take the least
// index.

#include "synckit/automaton.hpp"

namespace synckit {

// Subset searches are exponential in the state count; operations that need
// them refuse automata larger than the cap instead of thrashing.
inline constexpr int kDefaultSubsetCap = 20;

struct SyncResult {
    bool synchronizing = false;
    std::optional<Word> reset_word;
    // Length of a shortest reset word; filled by the exact search only.
    std::optional<int> threshold;
};

struct Dichotomy {
    enum class Kind { strongly_connected, synchronizing_with_sink };
    Kind kind = Kind::strongly_connected;
    std::optional<Word> reset_word;  // maps every state to `sink`
    std::optional<State> sink;
};

// Pair criterion: synchronizing iff every unordered state pair can reach a
// singleton in the pair automaton. Never materializes the power set.
bool is_synchronizing(const Automaton& aut);

// Breadth-first search over subsets reachable from the full state set.
// Throws CapacityError when states() > cap.
SyncResult shortest_reset_word(const Automaton& aut, int cap = kDefaultSubsetCap);

// Upper-bound reset word of length <= n^3, built by repeatedly merging the
// least pair of the current image via a shortest merging word. Works for
// any state count.
SyncResult greedy_reset_word(const Automaton& aut);

// The partition of the stability relation: (q, q') is stable iff every
// pair reachable from {q, q'} in the pair automaton is mergeable. The
// result is checked to be an equivalence and a congruence before it is
// returned.
Partition stability_relation(const Automaton& aut);

// Minimum of |Q.w| over all words, with a shortest witness attaining it.
std::pair<int, Word> minimal_word_rank(const Automaton& aut, int cap = kDefaultSubsetCap);

// A shortest word of rank exactly r, if any.
std::optional<Word> has_word_of_rank(const Automaton& aut, int r, int cap = kDefaultSubsetCap);

// For a primitive automaton with more than two states: either it is
// strongly connected, or it has a unique absorbing state and a reset word
// into it, built by repeatedly sending the least remaining image state to
// the sink. Throws std::invalid_argument when the hypotheses fail.
Dichotomy dichotomy(const Automaton& aut);

}  // namespace synckit
