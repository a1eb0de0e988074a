#pragma once

// Per-letter functional-graph structure: clusters, cycles, heights, roots,
// unimodality, kernel partitions and kernel types, semiconstants.

#include "synckit/automaton.hpp"

namespace synckit {

// The one-letter graph of `letter` decomposes into weakly connected
// components ("clusters"), each consisting of a unique cycle with trees
// hanging off it. Cluster ids are assigned by least contained state.
struct ClusterDecomposition {
    Letter letter = 0;
    std::vector<int> cluster_of;         // state -> cluster id
    std::vector<StateSet> cycle_states;  // per cluster, its cycle
    std::vector<int> height_of;          // least l with q.a^l on a cycle
    std::vector<State> root_of;          // cycle entry point; -1 for height-0 states

    int cluster_count() const { return static_cast<int>(cycle_states.size()); }
    int max_height() const;
};

ClusterDecomposition cluster_decomposition(const Automaton& aut, Letter a);

// True iff the letter has positive defect and all states of globally
// maximal height share one root. The maximum is taken across all clusters,
// not per cluster.
bool is_unimodal(const Automaton& aut, Letter a);

// Blocks are the non-empty preimage sets of single states under the letter.
Partition kernel_partition(const Automaton& aut, Letter a);

// Non-increasing sequence of kernel block sizes; sums to n, one entry per
// image state. A permutation letter yields all ones.
std::vector<int> kernel_type(const Automaton& aut, Letter a);

// True iff the letter has positive defect, fixes every state in its image,
// and sends all states outside the image to one state.
bool is_semiconstant(const Automaton& aut, Letter a);

}  // namespace synckit
