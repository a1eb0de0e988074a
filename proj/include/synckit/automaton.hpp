#pragma once

// Core model: complete deterministic finite automata over integer states
// 0..n-1 and letters 0..k-1, plus the word/state-set/partition values the
// analyses work with. Everything here is an immutable value; all operations
// are pure functions, so concurrent read-only sharing is safe.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synckit {

using State = int;
using Letter = int;

// A word is a finite sequence of letter indices; the empty vector is the
// empty word and acts as the identity.
using Word = std::vector<Letter>;

// A state set is kept sorted and duplicate-free.
using StateSet = std::vector<State>;

// Raised when a `dfa v1` text is malformed. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Raised when an operation would exceed its configured size cap
// (subset searches and exhaustive enumerations are exponential).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Automaton {
public:
    // `delta` is row-per-letter: entry a*n + q is q under letter a.
    // Throws std::invalid_argument on an empty state/letter count, a
    // mis-sized table, or an out-of-range entry.
    Automaton(int n, int k, std::vector<State> delta,
              std::vector<std::string> letter_names = {});

    int states() const { return n_; }
    int letters() const { return k_; }

    State step(State q, Letter a) const { return delta_[static_cast<size_t>(a) * n_ + q]; }
    State apply(State q, const Word& w) const;

    std::span<const State> row(Letter a) const {
        return {delta_.data() + static_cast<size_t>(a) * n_, static_cast<size_t>(n_)};
    }
    const std::vector<State>& table() const { return delta_; }

    const std::string& letter_name(Letter a) const { return letter_names_[a]; }
    const std::vector<std::string>& letter_names() const { return letter_names_; }

    // Letter names are presentation metadata; equality compares the table.
    friend bool operator==(const Automaton& lhs, const Automaton& rhs) {
        return lhs.n_ == rhs.n_ && lhs.k_ == rhs.k_ && lhs.delta_ == rhs.delta_;
    }

    void check_letter(Letter a) const;
    void check_word(const Word& w) const;

private:
    int n_;
    int k_;
    std::vector<State> delta_;
    std::vector<std::string> letter_names_;
};

// Equivalence relation on [0, n) in canonical form: each state maps to the
// least state index of its block.
class Partition {
public:
    static Partition equality(int n);
    static Partition universal(int n);

    // Canonicalizes an arbitrary representative map (reps need not be
    // minimal, only consistent: rep[rep[q]] == rep[q]).
    static Partition from_representatives(std::vector<State> rep);

    // Validates that the blocks are disjoint, non-empty and cover [0, n).
    static Partition from_blocks(int n, const std::vector<StateSet>& blocks);

    int size() const { return static_cast<int>(rep_.size()); }
    State representative(State q) const { return rep_[q]; }
    bool same_block(State p, State q) const { return rep_[p] == rep_[q]; }
    int block_count() const;
    std::vector<StateSet> blocks() const;

    bool is_equality() const;
    bool is_universal() const;

    // Relation-level intersection: p ~ q iff p ~ q in both operands.
    Partition meet(const Partition& other) const;

    // Block notation, e.g. "{0 1}{2}".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<State> rep) : rep_(std::move(rep)) {}
    std::vector<State> rep_;
};

// {p.w | p in set}; image(aut, set, {}) == set. Throws on an empty set,
// an out-of-range state, or a malformed word.
StateSet image(const Automaton& aut, const StateSet& set, const Word& w);

// (|Q.w|, n - |Q.w|).
std::pair<int, int> rank_and_defect(const Automaton& aut, const Word& w);
int word_rank(const Automaton& aut, const Word& w);

// Letters whose transformation is a bijection on the states, ascending.
std::vector<Letter> permutation_letters(const Automaton& aut);

// Restriction to the given letters (sorted ascending, duplicates ignored).
// Letters are renumbered in ascending original order; names are kept, so
// the original identity of each letter stays visible.
Automaton reduct(const Automaton& aut, const std::vector<Letter>& letters);

bool is_strongly_connected(const Automaton& aut);

// `dfa v1` text format.
//
//   dfa <n> <k>
//   <row of letter 0: n integers>
//   ...k rows...
//
// Lines starting with '#' and blank lines are ignored. Serialization is
// bit-deterministic and ends with a newline.
Automaton parse_automaton(std::string_view text);
std::string serialize_automaton(const Automaton& aut);

// DOT digraph with one edge per (state, target); parallel edges are merged
// into a single edge with comma-joined letter labels. Output ordering is
// deterministic.
std::string to_dot(const Automaton& aut);

// Renders a word using the automaton's letter names, space-separated;
// the empty word renders as "ε".
std::string render_word(const Automaton& aut, const Word& w);

}  // namespace synckit
