#pragma once

// Brute-force reference implementations used only by tests. Everything in
// here is deliberately naive and kept independent of the library's
// algorithmic paths: partitions are enumerated as restricted growth
// strings, congruences are checked pairwise, mergeability runs a forward
// search over ordered state pairs, and heights iterate the letter directly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/automaton.hpp"

namespace oracles {

using synckit::Automaton;
using synckit::Letter;
using synckit::State;
using synckit::Word;

// All partitions of [0, n) as representative maps (least member per block),
// enumerated via restricted growth strings.
inline std::vector<std::vector<State>> all_partitions(int n) {
    std::vector<std::vector<State>> out;
    std::vector<int> rgs(n, 0);
    while (true) {
        // Decode: block id -> least state carrying it.
        std::vector<State> first(n, -1);
        std::vector<State> rep(n);
        for (int q = 0; q < n; ++q) {
            if (first[rgs[q]] < 0) first[rgs[q]] = q;
            rep[q] = first[rgs[q]];
        }
        out.push_back(rep);

        // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1]).
        int i = n - 1;
        for (; i > 0; --i) {
            int limit = 0;
            for (int j = 0; j < i; ++j) limit = std::max(limit, rgs[j]);
            if (rgs[i] <= limit) {
                ++rgs[i];
                break;
            }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
    return out;
}

inline bool same_block(const std::vector<State>& rep, State p, State q) {
    return rep[p] == rep[q];
}

// Pairwise congruence test straight from the definition.
inline bool is_congruence_oracle(const Automaton& aut, const std::vector<State>& rep) {
    for (State p = 0; p < aut.states(); ++p)
        for (State q = p + 1; q < aut.states(); ++q) {
            if (rep[p] != rep[q]) continue;
            for (Letter a = 0; a < aut.letters(); ++a)
                if (rep[aut.step(p, a)] != rep[aut.step(q, a)]) return false;
        }
    return true;
}

inline std::vector<std::vector<State>> all_congruences(const Automaton& aut) {
    std::vector<std::vector<State>> out;
    for (const auto& rep : all_partitions(aut.states()))
        if (is_congruence_oracle(aut, rep)) out.push_back(rep);
    return out;
}

// Intersection (as relations) of all congruences containing (p, q).
inline std::vector<State> minimal_congruence_oracle(const Automaton& aut, State p, State q) {
    const int n = aut.states();
    std::vector<std::vector<State>> containing;
    for (const auto& rep : all_congruences(aut))
        if (same_block(rep, p, q)) containing.push_back(rep);
    std::vector<State> rep(n);
    for (State x = 0; x < n; ++x) {
        State least = x;
        for (State y = 0; y < x; ++y) {
            bool everywhere = true;
            for (const auto& c : containing)
                if (!same_block(c, x, y)) {
                    everywhere = false;
                    break;
                }
            if (everywhere) {
                least = rep[y];
                break;
            }
        }
        rep[x] = least;
    }
    return rep;
}

// Primitive iff every congruence is the equality or the universal relation.
// (On one state those coincide, and the single congruence is both.)
inline bool primitive_oracle(const Automaton& aut) {
    const int n = aut.states();
    for (const auto& rep : all_congruences(aut)) {
        bool equality = true;
        bool universal = true;
        for (State q = 0; q < n; ++q) {
            equality = equality && rep[q] == q;
            universal = universal && rep[q] == 0;
        }
        if (!equality && !universal) return false;
    }
    return true;
}

// Forward search over ordered pairs: can some word send p and q to the
// same state?
inline bool mergeable_oracle(const Automaton& aut, State p, State q) {
    if (p == q) return true;
    const int n = aut.states();
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    std::vector<std::pair<State, State>> queue{{p, q}};
    seen[p * n + q] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [x, y] = queue[head];
        for (Letter a = 0; a < aut.letters(); ++a) {
            State xa = aut.step(x, a);
            State ya = aut.step(y, a);
            if (xa == ya) return true;
            if (!seen[xa * n + ya]) {
                seen[xa * n + ya] = 1;
                queue.emplace_back(xa, ya);
            }
        }
    }
    return false;
}

// Bounded form of the stability condition: every image of the pair under
// a word of length at most `bound` must stay mergeable.
inline bool stable_pair_oracle(const Automaton& aut, State p, State q, int bound) {
    struct Item {
        State x, y;
        int depth;
    };
    std::vector<Item> stack{{p, q, 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (!mergeable_oracle(aut, it.x, it.y)) return false;
        if (it.depth == bound) continue;
        for (Letter a = 0; a < aut.letters(); ++a)
            stack.push_back({aut.step(it.x, a), aut.step(it.y, a), it.depth + 1});
    }
    return true;
}

// Directly iterates the letter: least l such that the l-th iterate of q
// recurs later in the trajectory.
inline int height_oracle(const Automaton& aut, State q, Letter a) {
    const int n = aut.states();
    std::vector<State> trajectory(2 * n + 1);
    trajectory[0] = q;
    for (int i = 1; i <= 2 * n; ++i) trajectory[i] = aut.step(trajectory[i - 1], a);
    for (int l = 0; l <= n; ++l)
        for (int m = l + 1; m <= 2 * n; ++m)
            if (trajectory[l] == trajectory[m]) return l;
    return -1;  // unreachable: trajectories over n states repeat within n steps
}

// Per-state reachability on the letter-union graph.
inline bool strongly_connected_oracle(const Automaton& aut) {
    const int n = aut.states();
    for (State start = 0; start < n; ++start) {
        std::vector<char> seen(n, 0);
        std::vector<State> stack{start};
        seen[start] = 1;
        int count = 1;
        while (!stack.empty()) {
            State x = stack.back();
            stack.pop_back();
            for (Letter a = 0; a < aut.letters(); ++a) {
                State y = aut.step(x, a);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        if (count != n) return false;
    }
    return true;
}

inline bool bijective_row_oracle(const Automaton& aut, Letter a) {
    std::vector<char> hit(aut.states(), 0);
    for (State q = 0; q < aut.states(); ++q) {
        State target = aut.step(q, a);
        if (hit[target]) return false;
        hit[target] = 1;
    }
    return true;
}

// Invokes fn on every word over k letters with length at most max_len,
// in length-then-lexicographic order (the empty word first).
template <typename Fn>
void for_each_word(int k, int max_len, Fn fn) {
    Word w;
    fn(w);
    std::vector<Word> frontier{w};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(frontier.size() * k);
        for (const Word& prefix : frontier) {
            for (Letter a = 0; a < k; ++a) {
                Word extended = prefix;
                extended.push_back(a);
                fn(extended);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
}

}  // namespace oracles
