#include "synckit/congruence.hpp"

#include <algorithm>
#include <utility>

namespace synckit {

namespace {

struct UnionFind {
    std::vector<State> leader;

    explicit UnionFind(int n) : leader(n) {
        for (int q = 0; q < n; ++q) leader[q] = q;
    }
    State find(State q) {
        while (leader[q] != q) {
            leader[q] = leader[leader[q]];
            q = leader[q];
        }
        return q;
    }
    // Returns false when already joined.
    bool join(State p, State q) {
        p = find(p);
        q = find(q);
        if (p == q) return false;
        leader[std::max(p, q)] = std::min(p, q);
        return true;
    }
};

Partition closure_partition(const Automaton& aut, UnionFind uf,
                            std::vector<std::pair<State, State>> worklist) {
    while (!worklist.empty()) {
        auto [x, y] = worklist.back();
        worklist.pop_back();
        for (Letter a = 0; a < aut.letters(); ++a) {
            State xa = aut.step(x, a);
            State ya = aut.step(y, a);
            if (uf.join(xa, ya)) worklist.emplace_back(xa, ya);
        }
    }
    std::vector<State> rep(aut.states());
    for (State q = 0; q < aut.states(); ++q) rep[q] = uf.find(q);
    return Partition::from_representatives(std::move(rep));
}

}  // namespace

bool is_congruence(const Automaton& aut, const Partition& p) {
    if (p.size() != aut.states())
        throw std::invalid_argument("is_congruence: partition size mismatch");
    for (State q = 0; q < aut.states(); ++q) {
        State r = p.representative(q);
        if (r == q) continue;
        for (Letter a = 0; a < aut.letters(); ++a)
            if (!p.same_block(aut.step(q, a), aut.step(r, a))) return false;
    }
    return true;
}

Partition principal_congruence(const Automaton& aut, State q, State r) {
    if (q == r)
        throw std::invalid_argument("principal_congruence: degenerate pair (" +
                                    std::to_string(q) + ", " + std::to_string(r) + ")");
    if (q < 0 || q >= aut.states() || r < 0 || r >= aut.states())
        throw std::invalid_argument("principal_congruence: state out of range");
    UnionFind uf(aut.states());
    uf.join(q, r);
    return closure_partition(aut, std::move(uf), {{q, r}});
}

PrimitivityVerdict is_primitive(const Automaton& aut) {
    const int n = aut.states();
    for (State q = 0; q < n; ++q) {
        for (State r = q + 1; r < n; ++r) {
            Partition p = principal_congruence(aut, q, r);
            if (!p.is_universal()) return {false, std::move(p)};
        }
    }
    return {true, std::nullopt};
}

PermutationPrimitivity is_permutation_primitive(const Automaton& aut) {
    std::vector<Letter> perms = permutation_letters(aut);
    if (perms.empty()) return PermutationPrimitivity::no_permutation_letters;
    return is_primitive(reduct(aut, perms)).primitive ? PermutationPrimitivity::primitive
                                                      : PermutationPrimitivity::not_primitive;
}

std::string to_string(PermutationPrimitivity v) {
    switch (v) {
        case PermutationPrimitivity::primitive: return "true";
        case PermutationPrimitivity::not_primitive: return "false";
        case PermutationPrimitivity::no_permutation_letters:
            return "undefined (no permutation letters)";
    }
    return "?";
}

StateSet orbit_closure(const Automaton& aut, State q) {
    if (q < 0 || q >= aut.states())
        throw std::invalid_argument("orbit_closure: state out of range");
    std::vector<char> seen(aut.states(), 0);
    std::vector<State> stack{q};
    seen[q] = 1;
    while (!stack.empty()) {
        State x = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < aut.letters(); ++a) {
            State y = aut.step(x, a);
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    StateSet out;
    for (State x = 0; x < aut.states(); ++x)
        if (seen[x]) out.push_back(x);
    return out;
}

Partition invariant_set_congruence(const Automaton& aut, const StateSet& s) {
    if (s.empty()) throw std::invalid_argument("invariant_set_congruence: empty set");
    std::vector<char> member(aut.states(), 0);
    for (State q : s) {
        if (q < 0 || q >= aut.states())
            throw std::invalid_argument("invariant_set_congruence: state out of range");
        member[q] = 1;
    }
    for (State q : s)
        for (Letter a = 0; a < aut.letters(); ++a)
            if (!member[aut.step(q, a)])
                throw std::invalid_argument(
                    "invariant_set_congruence: set is not invariant, state " + std::to_string(q) +
                    " escapes under letter " + std::to_string(a));
    State least = *std::min_element(s.begin(), s.end());
    std::vector<State> rep(aut.states());
    for (State q = 0; q < aut.states(); ++q) rep[q] = member[q] ? least : q;
    return Partition::from_representatives(std::move(rep));
}

}  // namespace synckit
