#include "synckit/sync.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "synckit/congruence.hpp"

namespace synckit {

namespace {

// Unordered pairs p < q of [0, n), indexed triangularly.
inline int pair_count(int n) { return n * (n - 1) / 2; }
inline int pair_id(int p, int q, int n) { return p * n - p * (p + 1) / 2 + (q - p - 1); }

struct PairGraph {
    int n = 0;
    int pairs = 0;
    std::vector<char> mergeable;
    // Reverse adjacency between pair nodes in CSR form (edges into
    // singletons are irrelevant for both uses of this graph).
    std::vector<int> rev_offset;
    std::vector<int> rev_edge;
};

PairGraph build_pair_graph(const Automaton& aut) {
    PairGraph g;
    g.n = aut.states();
    g.pairs = pair_count(g.n);
    g.mergeable.assign(g.pairs, 0);
    g.rev_offset.assign(g.pairs + 1, 0);

    const int k = aut.letters();
    std::vector<int> queue;
    queue.reserve(g.pairs);
    for (int p = 0; p < g.n; ++p) {
        for (int q = p + 1; q < g.n; ++q) {
            for (Letter a = 0; a < k; ++a) {
                State pa = aut.step(p, a);
                State qa = aut.step(q, a);
                if (pa == qa) {
                    int id = pair_id(p, q, g.n);
                    if (!g.mergeable[id]) {
                        g.mergeable[id] = 1;
                        queue.push_back(id);
                    }
                } else {
                    ++g.rev_offset[pair_id(std::min(pa, qa), std::max(pa, qa), g.n) + 1];
                }
            }
        }
    }
    for (int i = 0; i < g.pairs; ++i) g.rev_offset[i + 1] += g.rev_offset[i];
    g.rev_edge.assign(g.rev_offset[g.pairs], 0);
    std::vector<int> cursor(g.rev_offset.begin(), g.rev_offset.end() - 1);
    for (int p = 0; p < g.n; ++p) {
        for (int q = p + 1; q < g.n; ++q) {
            for (Letter a = 0; a < k; ++a) {
                State pa = aut.step(p, a);
                State qa = aut.step(q, a);
                if (pa != qa)
                    g.rev_edge[cursor[pair_id(std::min(pa, qa), std::max(pa, qa), g.n)]++] =
                        pair_id(p, q, g.n);
            }
        }
    }

    // A pair is mergeable iff it reaches a directly-merging pair.
    for (size_t head = 0; head < queue.size(); ++head) {
        int id = queue[head];
        for (int e = g.rev_offset[id]; e < g.rev_offset[id + 1]; ++e) {
            int pred = g.rev_edge[e];
            if (!g.mergeable[pred]) {
                g.mergeable[pred] = 1;
                queue.push_back(pred);
            }
        }
    }
    return g;
}

// Shortest (then lexicographically least) word merging states p and q.
// Requires the pair to be mergeable.
Word merge_word(const Automaton& aut, State p, State q) {
    const int n = aut.states();
    const int m = pair_count(n);
    std::vector<int> parent(m, -1);
    std::vector<int8_t> via(m, -1);
    int start = pair_id(std::min(p, q), std::max(p, q), n);
    parent[start] = start;
    std::vector<int> queue{start};
    for (size_t head = 0; head < queue.size(); ++head) {
        int id = queue[head];
        // Decode the pair from its id.
        int x = 0;
        int rest = id;
        while (rest >= n - 1 - x) {
            rest -= n - 1 - x;
            ++x;
        }
        int y = x + 1 + rest;
        for (Letter a = 0; a < aut.letters(); ++a) {
            State xa = aut.step(x, a);
            State ya = aut.step(y, a);
            if (xa == ya) {
                Word w;
                w.push_back(a);
                for (int node = id; node != start; node = parent[node]) w.push_back(via[node]);
                std::reverse(w.begin(), w.end());
                return w;
            }
            int next = pair_id(std::min(xa, ya), std::max(xa, ya), n);
            if (parent[next] < 0) {
                parent[next] = id;
                via[next] = static_cast<int8_t>(a);
                queue.push_back(next);
            }
        }
    }
    throw std::logic_error("merge_word: pair is not mergeable");
}

// Breadth-first search over images of the full state set, in shortest-word
// then lexicographic order. Dense bookkeeping below 21 states, hashed above.
class ImageBfs {
public:
    ImageBfs(const Automaton& aut, int cap, const std::string& op) : aut_(aut), n_(aut.states()) {
        if (n_ > cap)
            throw CapacityError(op + ": " + std::to_string(n_) +
                                " states exceed the subset-search cap " + std::to_string(cap));
        if (n_ > 63) throw CapacityError(op + ": subset search supports at most 63 states");
        full_ = n_ == 63 ? ~0ull >> 1 : (1ull << n_) - 1;
        dense_ = n_ <= 20;
        if (dense_) {
            parent_.assign(full_ + 1, kUnseen);
            via_.assign(full_ + 1, -1);
        }
    }

    // Visits every reachable image once; stops early when pred is true
    // (also checked on the start). Returns the matching mask, if any.
    template <typename Pred>
    std::optional<std::uint64_t> run(Pred pred) {
        mark(full_, full_, -1);
        if (pred(full_)) return full_;
        std::vector<std::uint64_t> queue{full_};
        for (size_t head = 0; head < queue.size(); ++head) {
            std::uint64_t mask = queue[head];
            for (Letter a = 0; a < aut_.letters(); ++a) {
                std::uint64_t next = 0;
                std::uint64_t bits = mask;
                while (bits) {
                    int q = std::countr_zero(bits);
                    bits &= bits - 1;
                    next |= 1ull << aut_.step(q, a);
                }
                if (seen(next)) continue;
                mark(next, mask, a);
                if (pred(next)) return next;
                queue.push_back(next);
            }
        }
        return std::nullopt;
    }

    Word word_to(std::uint64_t mask) const {
        Word w;
        while (mask != full_) {
            auto [parent, a] = lookup(mask);
            w.push_back(a);
            mask = parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    std::uint64_t full() const { return full_; }

private:
    static constexpr std::uint64_t kUnseen = ~0ull;

    bool seen(std::uint64_t mask) const {
        return dense_ ? parent_[mask] != kUnseen : sparse_.count(mask) > 0;
    }
    void mark(std::uint64_t mask, std::uint64_t parent, int via) {
        if (dense_) {
            parent_[mask] = parent;
            via_[mask] = static_cast<int8_t>(via);
        } else {
            sparse_.emplace(mask, std::make_pair(parent, static_cast<int8_t>(via)));
        }
    }
    std::pair<std::uint64_t, int> lookup(std::uint64_t mask) const {
        if (dense_) return {parent_[mask], via_[mask]};
        auto it = sparse_.find(mask);
        return {it->second.first, it->second.second};
    }

    const Automaton& aut_;
    int n_;
    std::uint64_t full_ = 0;
    bool dense_ = true;
    std::vector<std::uint64_t> parent_;
    std::vector<int8_t> via_;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int8_t>> sparse_;
};

}  // namespace

bool is_synchronizing(const Automaton& aut) {
    PairGraph g = build_pair_graph(aut);
    return std::find(g.mergeable.begin(), g.mergeable.end(), 0) == g.mergeable.end();
}

SyncResult shortest_reset_word(const Automaton& aut, int cap) {
    ImageBfs bfs(aut, cap, "shortest_reset_word");
    auto found = bfs.run([](std::uint64_t mask) { return std::popcount(mask) == 1; });
    if (!found) return {false, std::nullopt, std::nullopt};
    Word w = bfs.word_to(*found);
    int length = static_cast<int>(w.size());
    return {true, std::move(w), length};
}

SyncResult greedy_reset_word(const Automaton& aut) {
    const int n = aut.states();
    PairGraph g = build_pair_graph(aut);
    StateSet current(n);
    for (int q = 0; q < n; ++q) current[q] = q;
    Word w;
    while (current.size() > 1) {
        State p = -1;
        State q = -1;
        for (size_t i = 0; i < current.size() && p < 0; ++i)
            for (size_t j = i + 1; j < current.size(); ++j)
                if (g.mergeable[pair_id(current[i], current[j], n)]) {
                    p = current[i];
                    q = current[j];
                    break;
                }
        if (p < 0) return {false, std::nullopt, std::nullopt};
        Word u = merge_word(aut, p, q);
        w.insert(w.end(), u.begin(), u.end());
        current = image(aut, current, u);
    }
    return {true, std::move(w), std::nullopt};
}

Partition stability_relation(const Automaton& aut) {
    const int n = aut.states();
    PairGraph g = build_pair_graph(aut);

    // A pair is unstable iff it reaches a non-mergeable pair.
    std::vector<char> unstable(g.pairs, 0);
    std::vector<int> queue;
    for (int id = 0; id < g.pairs; ++id)
        if (!g.mergeable[id]) {
            unstable[id] = 1;
            queue.push_back(id);
        }
    for (size_t head = 0; head < queue.size(); ++head) {
        int id = queue[head];
        for (int e = g.rev_offset[id]; e < g.rev_offset[id + 1]; ++e) {
            int pred = g.rev_edge[e];
            if (!unstable[pred]) {
                unstable[pred] = 1;
                queue.push_back(pred);
            }
        }
    }

    std::vector<State> leader(n);
    for (int q = 0; q < n; ++q) leader[q] = q;
    auto find = [&](State q) {
        while (leader[q] != q) {
            leader[q] = leader[leader[q]];
            q = leader[q];
        }
        return q;
    };
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (!unstable[pair_id(p, q, n)]) {
                State x = find(p);
                State y = find(q);
                if (x != y) leader[std::max(x, y)] = std::min(x, y);
            }
    std::vector<State> rep(n);
    for (int q = 0; q < n; ++q) rep[q] = find(q);
    Partition sigma = Partition::from_representatives(std::move(rep));

    // The stability relation is an equivalence and a congruence; anything
    // else means the fixpoint computation itself is broken.
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (sigma.same_block(p, q) && unstable[pair_id(p, q, n)])
                throw std::logic_error("stability_relation: relation is not transitive");
    if (!is_congruence(aut, sigma))
        throw std::logic_error("stability_relation: relation is not a congruence");
    return sigma;
}

std::pair<int, Word> minimal_word_rank(const Automaton& aut, int cap) {
    ImageBfs bfs(aut, cap, "minimal_word_rank");
    int best = aut.states() + 1;
    std::uint64_t best_mask = 0;
    bfs.run([&](std::uint64_t mask) {
        int size = std::popcount(mask);
        if (size < best) {
            best = size;
            best_mask = mask;
        }
        return false;  // exhaust the reachable space
    });
    return {best, bfs.word_to(best_mask)};
}

std::optional<Word> has_word_of_rank(const Automaton& aut, int r, int cap) {
    if (r < 1 || r > aut.states())
        throw std::invalid_argument("has_word_of_rank: rank " + std::to_string(r) +
                                    " out of range [1, " + std::to_string(aut.states()) + "]");
    ImageBfs bfs(aut, cap, "has_word_of_rank");
    auto found = bfs.run([r](std::uint64_t mask) { return std::popcount(mask) == r; });
    if (!found) return std::nullopt;
    return bfs.word_to(*found);
}

Dichotomy dichotomy(const Automaton& aut) {
    const int n = aut.states();
    if (n <= 2) throw std::invalid_argument("dichotomy: requires more than two states");
    if (!is_primitive(aut).primitive)
        throw std::invalid_argument("dichotomy: automaton is not primitive");

    if (is_strongly_connected(aut)) return {Dichotomy::Kind::strongly_connected, {}, {}};

    State sink = -1;
    for (State q = 0; q < n; ++q) {
        if (orbit_closure(aut, q).size() == 1) {
            if (sink != -1) throw std::logic_error("dichotomy: two absorbing states");
            sink = q;
        }
    }
    if (sink == -1)
        throw std::logic_error("dichotomy: not strongly connected but no absorbing state");

    // Send the least non-sink image state to the sink until everything
    // lands there; the sink is fixed by every letter, so the image shrinks
    // at each round.
    auto word_to_sink = [&](State from) {
        std::vector<int> parent(n, -1);
        std::vector<int8_t> via(n, -1);
        parent[from] = from;
        std::vector<State> queue{from};
        for (size_t head = 0; head < queue.size(); ++head) {
            State x = queue[head];
            if (x == sink) {
                Word w;
                for (State node = x; node != from; node = parent[node]) w.push_back(via[node]);
                std::reverse(w.begin(), w.end());
                return w;
            }
            for (Letter a = 0; a < aut.letters(); ++a) {
                State y = aut.step(x, a);
                if (parent[y] < 0) {
                    parent[y] = x;
                    via[y] = static_cast<int8_t>(a);
                    queue.push_back(y);
                }
            }
        }
        throw std::logic_error("dichotomy: state cannot reach the absorbing state");
    };

    StateSet current(n);
    for (int q = 0; q < n; ++q) current[q] = q;
    Word w;
    while (!(current.size() == 1 && current[0] == sink)) {
        State q = current[0] == sink ? current[1] : current[0];
        Word u = word_to_sink(q);
        w.insert(w.end(), u.begin(), u.end());
        current = image(aut, current, u);
    }
    return {Dichotomy::Kind::synchronizing_with_sink, std::move(w), sink};
}

}  // namespace synckit
