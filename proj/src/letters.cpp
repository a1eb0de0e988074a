#include "synckit/letters.hpp"

#include <algorithm>
#include <numeric>

namespace synckit {

int ClusterDecomposition::max_height() const {
    return *std::max_element(height_of.begin(), height_of.end());
}

ClusterDecomposition cluster_decomposition(const Automaton& aut, Letter a) {
    aut.check_letter(a);
    const int n = aut.states();
    auto row = aut.row(a);

    // Cycle states are the ones that survive peeling indegree-0 states.
    std::vector<int> indegree(n, 0);
    for (State q = 0; q < n; ++q) ++indegree[row[q]];
    std::vector<State> queue;
    for (State q = 0; q < n; ++q)
        if (indegree[q] == 0) queue.push_back(q);
    std::vector<char> on_cycle(n, 1);
    while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        on_cycle[q] = 0;
        if (--indegree[row[q]] == 0) queue.push_back(row[q]);
    }

    std::vector<std::vector<State>> preds(n);
    for (State q = 0; q < n; ++q) preds[row[q]].push_back(q);

    // Heights and roots layer outward from the cycles along reverse edges.
    ClusterDecomposition out;
    out.letter = a;
    out.height_of.assign(n, 0);
    out.root_of.assign(n, -1);
    std::vector<State> frontier;
    for (State r = 0; r < n; ++r) {
        if (!on_cycle[r]) continue;
        for (State q : preds[r]) {
            if (on_cycle[q]) continue;
            out.height_of[q] = 1;
            out.root_of[q] = r;
            frontier.push_back(q);
        }
    }
    while (!frontier.empty()) {
        State x = frontier.back();
        frontier.pop_back();
        for (State q : preds[x]) {
            out.height_of[q] = out.height_of[x] + 1;
            out.root_of[q] = out.root_of[x];
            frontier.push_back(q);
        }
    }

    // Clusters are the weakly connected components; ids follow the least
    // contained state.
    std::vector<State> leader(n);
    std::iota(leader.begin(), leader.end(), 0);
    auto find = [&](State q) {
        while (leader[q] != q) {
            leader[q] = leader[leader[q]];
            q = leader[q];
        }
        return q;
    };
    for (State q = 0; q < n; ++q) {
        State x = find(q);
        State y = find(row[q]);
        if (x != y) leader[std::max(x, y)] = std::min(x, y);
    }
    std::vector<int> id_of_leader(n, -1);
    int next_id = 0;
    out.cluster_of.assign(n, 0);
    for (State q = 0; q < n; ++q) {
        State x = find(q);
        if (id_of_leader[x] < 0) id_of_leader[x] = next_id++;  // ascending scan: least state first
        out.cluster_of[q] = id_of_leader[x];
    }
    out.cycle_states.assign(next_id, {});
    for (State q = 0; q < n; ++q)
        if (on_cycle[q]) out.cycle_states[out.cluster_of[q]].push_back(q);
    return out;
}

bool is_unimodal(const Automaton& aut, Letter a) {
    aut.check_letter(a);
    if (rank_and_defect(aut, Word{a}).second == 0) return false;
    ClusterDecomposition d = cluster_decomposition(aut, a);
    int top = d.max_height();  // >= 1: positive defect leaves some state off-cycle
    State root = -1;
    for (State q = 0; q < aut.states(); ++q) {
        if (d.height_of[q] != top) continue;
        if (root == -1) root = d.root_of[q];
        else if (d.root_of[q] != root) return false;
    }
    return true;
}

Partition kernel_partition(const Automaton& aut, Letter a) {
    aut.check_letter(a);
    const int n = aut.states();
    auto row = aut.row(a);
    std::vector<State> first(n, -1);
    std::vector<State> rep(n);
    for (State q = 0; q < n; ++q) {
        if (first[row[q]] < 0) first[row[q]] = q;
        rep[q] = first[row[q]];
    }
    return Partition::from_representatives(std::move(rep));
}

std::vector<int> kernel_type(const Automaton& aut, Letter a) {
    aut.check_letter(a);
    std::vector<int> count(aut.states(), 0);
    for (State target : aut.row(a)) ++count[target];
    std::vector<int> sizes;
    for (int c : count)
        if (c > 0) sizes.push_back(c);
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
}

bool is_semiconstant(const Automaton& aut, Letter a) {
    aut.check_letter(a);
    const int n = aut.states();
    auto row = aut.row(a);
    std::vector<char> in_image(n, 0);
    for (State q = 0; q < n; ++q) in_image[row[q]] = 1;
    State outside_target = -1;
    bool has_outside = false;
    for (State q = 0; q < n; ++q) {
        if (in_image[q]) {
            if (row[q] != q) return false;
        } else {
            has_outside = true;
            if (outside_target == -1) outside_target = row[q];
            else if (row[q] != outside_target) return false;
        }
    }
    return has_outside;  // equivalent to positive defect
}

}  // namespace synckit
