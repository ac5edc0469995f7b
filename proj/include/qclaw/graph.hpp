#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "qclaw/seed.hpp"

namespace qclaw {

/**
 * Deduplicated set of seeds reachable from a root by mutation.
 *
 * Nodes are keyed by the canonical hash of the multiset of expansions, so
 * mutation paths reaching the same cluster with permuted internal labels
 * collapse to one node. Each node stores the labeling first discovered by
 * the BFS (ascending directions, queue order), which makes the numbering
 * deterministic. Edges are kept closed under the mutation involution:
 * (a, k, b) is present iff (b, k, a) is.
 */
struct ExchangeGraph {
    std::vector<QuantumSeed> nodes;
    std::vector<std::tuple<Int, Int, Int>> edges; // (node, direction k, node), symmetric
    Int root = 0;
    bool closed = true; // false when max_depth stopped a nonempty frontier

    Int node_count() const { return static_cast<Int>(nodes.size()); }
    /// Canonical undirected edge list: one (a, k, b) with a <= b per
    /// direction-labeled adjacency, sorted.
    std::vector<std::tuple<Int, Int, Int>> canonical_edges() const;
};

/// Label-independent identity of a seed: the sorted multiset of expansion
/// renderings. Two seeds get equal keys iff their clusters coincide.
std::string canonical_seed_key(const QuantumSeed& seed);

/// Identity of a single cluster variable: the canonical rendering of its
/// expansion in the initial torus.
std::string variable_key(const TorusElement& expansion);

/// Breadth-first enumeration with canonical-hash dedup. In finite type the
/// graph closes before any reasonable depth; max_depth caps the search
/// otherwise and clears `closed`.
ExchangeGraph enumerate_graph(const QuantumSeed& root, Int max_depth = 64);

/**
 * Visits every cluster of the graph once, walking mutations from `root` in
 * lockstep with a twin seed, and reports each visited pair to `visit`.
 * The twin starts as `shadow` and receives exactly the same mutation
 * sequence, so index positions of the pair always refer to the same
 * variable. Visit order is deterministic (BFS, ascending directions).
 */
void lockstep_walk(const QuantumSeed& root, const QuantumSeed& shadow,
                   const std::function<void(const QuantumSeed&, const QuantumSeed&)>& visit,
                   Int max_depth = 64);

/// Expansions of every cluster variable of the component of `seed`, written
/// in seed's own torus: variable key -> expansion over seed.rebased().
std::map<std::string, TorusElement> expansions_over(const QuantumSeed& seed, Int max_depth = 64);

} // namespace qclaw
