#pragma once

// Verification harness: named fixtures, the Cerny series, exhaustive and
// random enumeration of transition tables, and claim checkers that hunt
// for counterexamples to the synchronization laws this library implements.

#include <cstdint>

#include "synckit/automaton.hpp"
#include "synckit/sync.hpp"

namespace synckit {

// Named example automata. Valid names: fig1-cluster, fig2-left, fig2-right,
// fig3, sink3. Throws std::invalid_argument on an unknown name.
Automaton fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

// Cerny automaton C_n: letter a cycles the states, letter b deflects state
// 0 to 1 and fixes the rest. Reset threshold (n-1)^2. Requires n >= 2.
Automaton cerny(int n);

// Deterministic, reproducible pseudo-random transition table. The
// generator is a fixed SplitMix64 stream seeded with `seed`; each table
// entry consumes one output reduced mod n, so results are bit-stable
// across platforms.
Automaton random_automaton(int n, int k, std::uint64_t seed);

// Seed for the i-th automaton of a seeded random sample. Workers can
// compute any sample element independently of chunk boundaries.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

// All n^(n*k) transition tables in lexicographic order of the flattened
// (row-per-letter) table. Construction refuses totals above the guard
// unless overridden.
class AutomatonEnumeration {
public:
    static constexpr std::uint64_t kGuard = 100'000'000;

    AutomatonEnumeration(int n, int k, bool override_guard = false);

    std::uint64_t total() const { return total_; }
    Automaton at(std::uint64_t index) const;

    int states() const { return n_; }
    int letters() const { return k_; }

private:
    int n_;
    int k_;
    std::uint64_t total_;
};

// The checkable statements. Each claim is an implication evaluated on one
// automaton: `violated` means the hypotheses held but the conclusion
// failed, which for everything except `small_defect_sync` (a conjecture,
// though one the other laws here imply) would expose an implementation bug.
enum class Claim {
    // primitive + some unimodal letter  =>  synchronizing
    unimodal_sync,
    // primitive + n >= 3 + some word of rank 2  =>  synchronizing
    rank2_sync,
    // primitive + n > 2  =>  strongly connected or synchronizing
    dichotomy,
    // some letter of kernel type (k,1,...), k > 1  =>  all such letters unimodal
    kernel_type_unimodal,
    // stability is a congruence; synchronizing <=> stability universal
    stability_laws,
    // strongly connected + some unimodal letter  =>  stability != equality
    connected_unimodal_stability,
    // primitive + some letter of kernel type (k,1,...), k > 1  =>  synchronizing
    kernel_type_sync,
    // primitive + some letter of defect 1  =>  synchronizing
    defect1_sync,
    // primitive + some semiconstant letter  =>  synchronizing
    semiconstant_sync,
    // primitive + all letters of defect <= 1, not all 0  =>  synchronizing
    small_defect_sync,
    // permutation-primitive  =>  primitive
    perm_primitive_implies_primitive,
};

const std::vector<Claim>& all_claims();
std::string claim_name(Claim c);
std::optional<Claim> claim_from_name(std::string_view name);

struct ClaimResult {
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    bool violated = false;  // hypotheses_hold && !conclusion_holds
};

struct ClaimReport {
    std::vector<std::pair<Claim, ClaimResult>> results;
    bool any_violated = false;
    // Serialized automaton, attached whenever any claim is violated so the
    // counterexample can be replayed through the CLI.
    std::string certificate;
};

// An empty claim list means all claims. `cap` bounds the subset search
// behind the rank-2 hypothesis.
ClaimReport check_claims(const Automaton& aut, const std::vector<Claim>& claims = {},
                         int cap = kDefaultSubsetCap);

struct SweepOptions {
    int n = 1;
    int k = 1;
    std::vector<Claim> claims;  // empty means all
    int workers = 1;
    // When set, checks `sample_count` seeded random automata instead of the
    // exhaustive stream.
    std::optional<std::uint64_t> sample_count;
    std::uint64_t seed = 0;
    bool override_guard = false;
};

struct CounterexampleRecord {
    std::uint64_t index = 0;  // enumeration or sample index
    std::string certificate;  // dfa v1 text
};

// Aggregated result of a sweep. Identical for any worker count on fixed
// inputs; `wall_seconds` is informational and excluded from to_text().
struct SweepReport {
    int n = 0;
    int k = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    std::uint64_t total = 0;
    std::vector<Claim> claims;
    std::vector<std::uint64_t> violations;  // parallel to `claims`
    // Least-index counterexample per claim, when any exists.
    std::vector<std::optional<CounterexampleRecord>> first_counterexample;
    std::uint64_t primitive_count = 0;
    std::uint64_t synchronizing_count = 0;
    std::uint64_t permutation_primitive_count = 0;
    double wall_seconds = 0.0;

    bool any_violated() const;
    std::uint64_t total_violations() const;
    std::string to_text() const;
};

SweepReport sweep(const SweepOptions& options);

}  // namespace synckit
