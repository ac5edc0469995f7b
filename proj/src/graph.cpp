#include "qclaw/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "qclaw/json_io.hpp"

namespace qclaw {

std::string variable_key(const TorusElement& expansion) {
    return torus_element_to_json(expansion).dump();
}

std::string canonical_seed_key(const QuantumSeed& seed) {
    std::vector<std::string> parts;
    parts.reserve(seed.expansions().size());
    for (const auto& e : seed.expansions()) parts.push_back(variable_key(e));
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    for (const auto& p : parts) os << p << '\n';
    return os.str();
}

std::vector<std::tuple<Int, Int, Int>> ExchangeGraph::canonical_edges() const {
    std::set<std::tuple<Int, Int, Int>> out;
    for (const auto& [a, k, b] : edges) out.emplace(std::min(a, b), k, std::max(a, b));
    return {out.begin(), out.end()};
}

ExchangeGraph enumerate_graph(const QuantumSeed& root, Int max_depth) {
    ExchangeGraph g;
    g.nodes.push_back(root);
    std::map<std::string, Int> index_of{{canonical_seed_key(root), 0}};
    std::set<std::tuple<Int, Int, Int>> edges;

    std::deque<std::pair<Int, Int>> frontier{{0, 0}}; // (node, depth)
    g.closed = true;
    while (!frontier.empty()) {
        const auto [ni, depth] = frontier.front();
        frontier.pop_front();
        if (depth >= max_depth) {
            g.closed = false;
            continue;
        }
        // Copy: nodes may reallocate while we push discoveries.
        const QuantumSeed current = g.nodes[static_cast<size_t>(ni)];
        for (Int k : current.exchangeable()) {
            QuantumSeed next = current.mutate(k);
            const std::string key = canonical_seed_key(next);
            auto it = index_of.find(key);
            Int ti;
            if (it == index_of.end()) {
                ti = static_cast<Int>(g.nodes.size());
                index_of.emplace(key, ti);
                g.nodes.push_back(std::move(next));
                frontier.emplace_back(ti, depth + 1);
            } else {
                ti = it->second;
            }
            edges.emplace(ni, k, ti);
            edges.emplace(ti, k, ni);
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

void lockstep_walk(const QuantumSeed& root, const QuantumSeed& shadow,
                   const std::function<void(const QuantumSeed&, const QuantumSeed&)>& visit,
                   Int max_depth) {
    std::set<std::string> seen{canonical_seed_key(root)};
    std::deque<std::tuple<QuantumSeed, QuantumSeed, Int>> queue;
    queue.emplace_back(root, shadow, 0);
    visit(root, shadow);
    while (!queue.empty()) {
        auto [prim, twin, depth] = std::move(queue.front());
        queue.pop_front();
        if (depth >= max_depth) continue;
        for (Int k : prim.exchangeable()) {
            QuantumSeed p2 = prim.mutate(k);
            if (!seen.insert(canonical_seed_key(p2)).second) continue;
            QuantumSeed t2 = twin.mutate(k);
            visit(p2, t2);
            queue.emplace_back(std::move(p2), std::move(t2), depth + 1);
        }
    }
}

std::map<std::string, TorusElement> expansions_over(const QuantumSeed& seed, Int max_depth) {
    std::map<std::string, TorusElement> table;
    lockstep_walk(seed, seed.rebased(),
                  [&](const QuantumSeed& prim, const QuantumSeed& reb) {
                      for (size_t i = 0; i < prim.expansions().size(); ++i) {
                          const std::string key = variable_key(prim.expansions()[i]);
                          auto it = table.find(key);
                          if (it == table.end()) {
                              table.emplace(key, reb.expansions()[i]);
                          } else if (!(it->second == reb.expansions()[i])) {
                              throw ConventionMismatchError(
                                  "a variable received two different expansions over one seed");
                          }
                      }
                  },
                  max_depth);
    return table;
}

} // namespace qclaw
