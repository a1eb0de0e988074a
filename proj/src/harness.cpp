#include "synckit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "synckit/congruence.hpp"
#include "synckit/letters.hpp"
#include "synckit/sync.hpp"

namespace synckit {

namespace {

Automaton make_fixture(std::string_view name) {
    if (name == "fig2-left")
        return Automaton(5, 2, {1, 0, 3, 3, 0, 0, 2, 3, 4, 1}, {"a", "b"});
    if (name == "fig2-right")
        return Automaton(5, 3, {3, 0, 3, 4, 0, 2, 4, 0, 3, 1, 0, 2, 1, 3, 4}, {"a", "b", "c"});
    if (name == "fig3")
        return Automaton(9, 4,
                         {0, 0, 0, 4, 4, 4, 8, 8, 8,    // fold each row block onto its diagonal
                          3, 4, 5, 0, 1, 2, 6, 7, 8,    // swap blocks 0 and 1
                          0, 1, 2, 6, 7, 8, 3, 4, 5,    // swap blocks 1 and 2
                          0, 3, 6, 1, 4, 7, 2, 5, 8},   // transpose of the 3x3 grid
                         {"a", "b", "c", "e"});
    if (name == "fig1-cluster")
        return Automaton(15, 1, {1, 2, 3, 0, 5, 1, 5, 0, 0, 2, 9, 9, 11, 11, 10}, {"a"});
    if (name == "sink3")
        return Automaton(3, 2, {1, 2, 2, 0, 0, 2}, {"a", "b"});
    throw std::invalid_argument("fixture: unknown name '" + std::string(name) + "'");
}

}  // namespace

Automaton fixture(std::string_view name) { return make_fixture(name); }

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"fig1-cluster", "fig2-left", "fig2-right",
                                                   "fig3", "sink3"};
    return names;
}

Automaton cerny(int n) {
    if (n < 2) throw std::invalid_argument("cerny: needs at least 2 states");
    std::vector<State> delta(2 * n);
    for (int q = 0; q < n; ++q) {
        delta[q] = (q + 1) % n;
        delta[n + q] = q;
    }
    delta[n] = 1;
    return Automaton(n, 2, std::move(delta), {"a", "b"});
}

namespace {

// SplitMix64: one 64-bit state, one output per step. Fixed here so seeded
// results stay identical across platforms and releases.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

}  // namespace

Automaton random_automaton(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("random_automaton: n and k must be positive");
    SplitMix64 rng{seed};
    std::vector<State> delta(static_cast<size_t>(n) * k);
    for (State& entry : delta) entry = static_cast<State>(rng.next() % n);
    return Automaton(n, k, std::move(delta));
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 a{index};
    SplitMix64 b{seed ^ a.next()};
    return b.next();
}

AutomatonEnumeration::AutomatonEnumeration(int n, int k, bool override_guard) : n_(n), k_(k) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumeration: n and k must be positive");
    total_ = 1;
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * k;
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (total_ > UINT64_MAX / static_cast<std::uint64_t>(n))
            throw CapacityError("enumeration: n^(n*k) does not fit in 64 bits");
        total_ *= static_cast<std::uint64_t>(n);
    }
    if (total_ > kGuard && !override_guard)
        throw CapacityError("enumeration: " + std::to_string(total_) +
                            " automata exceed the guard of " + std::to_string(kGuard) +
                            " (override to proceed)");
}

Automaton AutomatonEnumeration::at(std::uint64_t index) const {
    if (index >= total_) throw std::out_of_range("enumeration: index out of range");
    std::vector<State> delta(static_cast<size_t>(n_) * k_);
    for (size_t i = delta.size(); i-- > 0;) {
        delta[i] = static_cast<State>(index % n_);
        index /= n_;
    }
    return Automaton(n_, k_, std::move(delta));
}

const std::vector<Claim>& all_claims() {
    static const std::vector<Claim> claims = {
        Claim::unimodal_sync,
        Claim::rank2_sync,
        Claim::dichotomy,
        Claim::kernel_type_unimodal,
        Claim::stability_laws,
        Claim::connected_unimodal_stability,
        Claim::kernel_type_sync,
        Claim::defect1_sync,
        Claim::semiconstant_sync,
        Claim::small_defect_sync,
        Claim::perm_primitive_implies_primitive,
    };
    return claims;
}

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::unimodal_sync: return "unimodal-sync";
        case Claim::rank2_sync: return "rank2-sync";
        case Claim::dichotomy: return "dichotomy";
        case Claim::kernel_type_unimodal: return "kernel-type-unimodal";
        case Claim::stability_laws: return "stability-laws";
        case Claim::connected_unimodal_stability: return "connected-unimodal-stability";
        case Claim::kernel_type_sync: return "kernel-type-sync";
        case Claim::defect1_sync: return "defect1-sync";
        case Claim::semiconstant_sync: return "semiconstant-sync";
        case Claim::small_defect_sync: return "small-defect-sync";
        case Claim::perm_primitive_implies_primitive: return "perm-primitive";
    }
    return "?";
}

std::optional<Claim> claim_from_name(std::string_view name) {
    for (Claim c : all_claims())
        if (claim_name(c) == name) return c;
    return std::nullopt;
}

namespace {

// Lazily computed facts of one automaton, shared by the claims.
class ClaimEvaluator {
public:
    ClaimEvaluator(const Automaton& aut, int cap) : aut_(aut), cap_(cap) {}

    ClaimResult eval(Claim c) {
        bool hyp = false;
        bool concl = false;
        const int n = aut_.states();
        switch (c) {
            case Claim::unimodal_sync:
                hyp = any_unimodal() && primitive();
                concl = synchronizing();
                break;
            case Claim::rank2_sync:
                hyp = n >= 3 && primitive() && has_rank2_word();
                concl = synchronizing();
                break;
            case Claim::dichotomy:
                hyp = n > 2 && primitive();
                concl = strongly_connected() || synchronizing();
                break;
            case Claim::kernel_type_unimodal:
                hyp = false;
                concl = true;
                for (Letter a = 0; a < aut_.letters(); ++a) {
                    if (!letter(a).single_nontrivial_kernel_class) continue;
                    hyp = true;
                    concl = concl && letter(a).unimodal;
                }
                break;
            case Claim::stability_laws:
                hyp = true;
                concl = sigma_valid() &&
                        is_congruence(aut_, *sigma_) &&
                        (synchronizing() == sigma_->is_universal());
                break;
            case Claim::connected_unimodal_stability:
                hyp = strongly_connected() && any_unimodal();
                concl = sigma_valid() && !sigma_->is_equality();
                break;
            case Claim::kernel_type_sync:
                hyp = false;
                for (Letter a = 0; a < aut_.letters() && !hyp; ++a)
                    hyp = letter(a).single_nontrivial_kernel_class;
                hyp = hyp && primitive();
                concl = synchronizing();
                break;
            case Claim::defect1_sync:
                hyp = false;
                for (Letter a = 0; a < aut_.letters() && !hyp; ++a)
                    hyp = letter(a).defect == 1;
                hyp = hyp && primitive();
                concl = synchronizing();
                break;
            case Claim::semiconstant_sync:
                hyp = false;
                for (Letter a = 0; a < aut_.letters() && !hyp; ++a)
                    hyp = letter(a).semiconstant;
                hyp = hyp && primitive();
                concl = synchronizing();
                break;
            case Claim::small_defect_sync: {
                bool all_small = true;
                bool some_one = false;
                for (Letter a = 0; a < aut_.letters(); ++a) {
                    all_small = all_small && letter(a).defect <= 1;
                    some_one = some_one || letter(a).defect == 1;
                }
                hyp = all_small && some_one && primitive();
                concl = synchronizing();
                break;
            }
            case Claim::perm_primitive_implies_primitive:
                hyp = permutation_primitivity() == PermutationPrimitivity::primitive;
                concl = primitive();
                break;
        }
        return {hyp, concl, hyp && !concl};
    }

    bool primitive() {
        if (!primitive_) primitive_ = is_primitive(aut_).primitive;
        return *primitive_;
    }
    bool synchronizing() {
        if (!synchronizing_) synchronizing_ = is_synchronizing(aut_);
        return *synchronizing_;
    }
    PermutationPrimitivity permutation_primitivity() {
        if (!perm_primitive_) perm_primitive_ = is_permutation_primitive(aut_);
        return *perm_primitive_;
    }

private:
    struct LetterFacts {
        int defect = 0;
        bool unimodal = false;
        bool semiconstant = false;
        bool single_nontrivial_kernel_class = false;  // kernel type (k,1,1,...), k > 1
    };

    const LetterFacts& letter(Letter a) {
        if (letters_.empty()) {
            letters_.resize(aut_.letters());
            for (Letter b = 0; b < aut_.letters(); ++b) {
                LetterFacts& f = letters_[b];
                std::vector<int> type = kernel_type(aut_, b);
                f.defect = aut_.states() - static_cast<int>(type.size());
                int nontrivial = 0;
                for (int size : type)
                    if (size > 1) ++nontrivial;
                f.single_nontrivial_kernel_class = nontrivial == 1;
                f.unimodal = f.defect > 0 && is_unimodal(aut_, b);
                f.semiconstant = is_semiconstant(aut_, b);
            }
        }
        return letters_[a];
    }
    bool any_unimodal() {
        for (Letter a = 0; a < aut_.letters(); ++a)
            if (letter(a).unimodal) return true;
        return false;
    }
    bool strongly_connected() {
        if (!strongly_connected_) strongly_connected_ = is_strongly_connected(aut_);
        return *strongly_connected_;
    }
    bool has_rank2_word() {
        if (!has_rank2_) has_rank2_ = has_word_of_rank(aut_, 2, cap_).has_value();
        return *has_rank2_;
    }
    // The stability computation asserts its own postconditions; a failed
    // assertion counts as a falsified conclusion rather than a crash, so
    // sweeps would report it as a counterexample.
    bool sigma_valid() {
        if (!sigma_tried_) {
            sigma_tried_ = true;
            try {
                sigma_.emplace(stability_relation(aut_));
            } catch (const std::logic_error&) {
                sigma_.reset();
            }
        }
        return sigma_.has_value();
    }

    const Automaton& aut_;
    int cap_;
    std::vector<LetterFacts> letters_;
    std::optional<bool> primitive_;
    std::optional<bool> synchronizing_;
    std::optional<bool> strongly_connected_;
    std::optional<bool> has_rank2_;
    std::optional<PermutationPrimitivity> perm_primitive_;
    bool sigma_tried_ = false;
    std::optional<Partition> sigma_;
};

std::vector<Claim> normalize_claims(const std::vector<Claim>& claims) {
    if (claims.empty()) return all_claims();
    std::vector<Claim> out;
    for (Claim c : claims)
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    return out;
}

}  // namespace

ClaimReport check_claims(const Automaton& aut, const std::vector<Claim>& claims, int cap) {
    ClaimReport report;
    ClaimEvaluator eval(aut, cap);
    for (Claim c : normalize_claims(claims)) {
        ClaimResult r = eval.eval(c);
        report.any_violated = report.any_violated || r.violated;
        report.results.emplace_back(c, r);
    }
    if (report.any_violated) report.certificate = serialize_automaton(aut);
    return report;
}

bool SweepReport::any_violated() const { return total_violations() > 0; }

std::uint64_t SweepReport::total_violations() const {
    std::uint64_t sum = 0;
    for (std::uint64_t v : violations) sum += v;
    return sum;
}

std::string SweepReport::to_text() const {
    std::string out;
    out += "sweep: n=" + std::to_string(n) + " k=" + std::to_string(k) + "\n";
    out += sampled ? "mode: sample seed=" + std::to_string(seed) : std::string("mode: exhaustive");
    out += "\n";
    out += "total: " + std::to_string(total) + "\n";
    out += "primitive: " + std::to_string(primitive_count) + "\n";
    out += "synchronizing: " + std::to_string(synchronizing_count) + "\n";
    out += "permutation-primitive: " + std::to_string(permutation_primitive_count) + "\n";
    out += "violations:\n";
    for (size_t i = 0; i < claims.size(); ++i)
        out += "  " + claim_name(claims[i]) + ": " + std::to_string(violations[i]) + "\n";
    if (!any_violated()) {
        out += "counterexamples: none\n";
    } else {
        for (size_t i = 0; i < claims.size(); ++i) {
            if (!first_counterexample[i]) continue;
            out += "counterexample[" + claim_name(claims[i]) +
                   "]: index " + std::to_string(first_counterexample[i]->index) + "\n";
            out += first_counterexample[i]->certificate;
        }
    }
    return out;
}

SweepReport sweep(const SweepOptions& options) {
    if (options.workers < 1) throw std::invalid_argument("sweep: workers must be positive");
    const std::vector<Claim> claims = normalize_claims(options.claims);
    const auto start_time = std::chrono::steady_clock::now();

    std::optional<AutomatonEnumeration> enumeration;
    std::uint64_t total;
    if (options.sample_count) {
        if (options.n < 1 || options.k < 1)
            throw std::invalid_argument("sweep: n and k must be positive");
        total = *options.sample_count;
    } else {
        enumeration.emplace(options.n, options.k, options.override_guard);
        total = enumeration->total();
    }

    struct Partial {
        std::vector<std::uint64_t> violations;
        std::vector<std::uint64_t> least_index;
        std::uint64_t primitive = 0;
        std::uint64_t synchronizing = 0;
        std::uint64_t permutation_primitive = 0;
    };

    auto automaton_at = [&](std::uint64_t index) {
        return options.sample_count
                   ? random_automaton(options.n, options.k, sample_seed(options.seed, index))
                   : enumeration->at(index);
    };

    auto scan = [&](std::uint64_t lo, std::uint64_t hi, Partial& part) {
        part.violations.assign(claims.size(), 0);
        part.least_index.assign(claims.size(), UINT64_MAX);
        for (std::uint64_t index = lo; index < hi; ++index) {
            Automaton aut = automaton_at(index);
            ClaimEvaluator eval(aut, kDefaultSubsetCap);
            for (size_t i = 0; i < claims.size(); ++i) {
                if (eval.eval(claims[i]).violated) {
                    ++part.violations[i];
                    part.least_index[i] = std::min(part.least_index[i], index);
                }
            }
            if (eval.primitive()) ++part.primitive;
            if (eval.synchronizing()) ++part.synchronizing;
            if (eval.permutation_primitivity() == PermutationPrimitivity::primitive)
                ++part.permutation_primitive;
        }
    };

    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), std::max<std::uint64_t>(total, 1)));
    std::vector<Partial> partials(workers);
    if (workers == 1) {
        scan(0, total, partials[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
            std::uint64_t len = total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
            pool.emplace_back([&, w, lo, len] {
                try {
                    scan(lo, lo + len, partials[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    SweepReport report;
    report.n = options.n;
    report.k = options.k;
    report.sampled = options.sample_count.has_value();
    report.seed = options.seed;
    report.total = total;
    report.claims = claims;
    report.violations.assign(claims.size(), 0);
    report.first_counterexample.assign(claims.size(), std::nullopt);
    std::vector<std::uint64_t> least(claims.size(), UINT64_MAX);
    for (const Partial& part : partials) {
        for (size_t i = 0; i < claims.size(); ++i) {
            report.violations[i] += part.violations[i];
            least[i] = std::min(least[i], part.least_index[i]);
        }
        report.primitive_count += part.primitive;
        report.synchronizing_count += part.synchronizing;
        report.permutation_primitive_count += part.permutation_primitive;
    }
    for (size_t i = 0; i < claims.size(); ++i)
        if (least[i] != UINT64_MAX)
            report.first_counterexample[i] =
                CounterexampleRecord{least[i], serialize_automaton(automaton_at(least[i]))};
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

}  // namespace synckit
