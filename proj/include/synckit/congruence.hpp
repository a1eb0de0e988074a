#pragma once

// Congruences: equivalences preserved by every letter. Primitivity means
// the equality and the universal relation are the only congruences.

#include "synckit/automaton.hpp"

namespace synckit {

struct PrimitivityVerdict {
    bool primitive = false;
    // A nontrivial proper congruence, present exactly when not primitive;
    // deterministically the principal congruence of the least failing pair.
    std::optional<Partition> witness;
};

bool is_congruence(const Automaton& aut, const Partition& p);

// Least congruence containing (q, r), computed by union-find closure:
// whenever two states merge, their letter images merge too.
// Throws std::invalid_argument when q == r.
Partition principal_congruence(const Automaton& aut, State q, State r);

// Primitive iff the principal congruence of every state pair is universal.
// A single-state automaton is primitive: its one congruence is both the
// equality and the universal relation.
PrimitivityVerdict is_primitive(const Automaton& aut);

enum class PermutationPrimitivity {
    primitive,
    not_primitive,
    // The automaton has no permutation letters, so the restriction the
    // notion is defined on does not exist.
    no_permutation_letters,
};

// Primitivity of the reduct to the permutation letters.
PermutationPrimitivity is_permutation_primitive(const Automaton& aut);

std::string to_string(PermutationPrimitivity v);

// Least invariant subset containing q (forward reachability closure).
StateSet orbit_closure(const Automaton& aut, State q);

// The congruence whose only non-singleton block is the invariant set `s`.
// Throws std::invalid_argument naming an escaping (state, letter) if `s`
// is not invariant.
Partition invariant_set_congruence(const Automaton& aut, const StateSet& s);

}  // namespace synckit
