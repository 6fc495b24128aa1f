#include "sgt/enumerate.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <thread>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "sgt/canonical.hpp"

namespace sgt {

namespace {

// Every connected graph on n >= 2 vertices arises from a connected graph
// on n-1 vertices by adding one vertex joined to a nonempty subset
// (remove any non-cut vertex to see this), so level-by-level augmentation
// with canonical dedup is exhaustive.
std::vector<Graph> augment_connected(const std::vector<Graph>& prev, int n) {
    const std::uint64_t full = (1ull << (n - 1)) - 1;
    auto candidates_of = [&](const Graph& p) {
        std::vector<std::pair<std::uint64_t, Graph>> keyed;
        keyed.reserve(full);
        for (std::uint64_t sub = 1; sub <= full; ++sub) {
            std::vector<Edge> edges = p.edges();
            for (std::uint64_t s = sub; s; s &= s - 1)
                edges.emplace_back(std::countr_zero(s), n - 1);
            Graph g = Graph::from_edge_list(n, edges);
            keyed.emplace_back(canonical_key(g), std::move(g));
        }
        return keyed;
    };

    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    unsigned workers = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
    const size_t block = 64 * workers;
    for (size_t base = 0; base < prev.size(); base += block) {
        size_t end = std::min(prev.size(), base + block);
        // keys are computed in parallel; the merge below is sequential in
        // parent order, so the result is independent of the worker count
        std::vector<std::vector<std::pair<std::uint64_t, Graph>>> keyed(end - base);
        std::vector<std::thread> pool;
        std::atomic<size_t> next{base};
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < end; i = next.fetch_add(1))
                    keyed[i - base] = candidates_of(prev[i]);
            });
        for (auto& th : pool) th.join();
        for (auto& group : keyed)
            for (auto& [key, g] : group)
                if (seen.insert(key).second) out.push_back(std::move(g));
    }
    return out;
}

// Trees arise from trees by attaching one leaf.
std::vector<Graph> augment_trees(const std::vector<Graph>& prev, int n) {
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (const Graph& p : prev) {
        for (int v = 0; v < n - 1; ++v) {
            std::vector<Edge> edges = p.edges();
            edges.emplace_back(v, n - 1);
            Graph g = Graph::from_edge_list(n, edges);
            if (seen.insert(canonical_form(g)).second) out.push_back(g);
        }
    }
    return out;
}

std::mutex cache_mutex;

const std::vector<Graph>& connected_level(int n) {
    static std::vector<std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.empty()) cache.push_back({Graph::from_edge_list(1, {})});  // index 0 -> n=1
    while (static_cast<int>(cache.size()) < n)
        cache.push_back(augment_connected(cache.back(), static_cast<int>(cache.size()) + 1));
    return cache[static_cast<size_t>(n - 1)];
}

const std::vector<Graph>& tree_level(int n) {
    static std::vector<std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.empty()) cache.push_back({Graph::from_edge_list(1, {})});
    while (static_cast<int>(cache.size()) < n)
        cache.push_back(augment_trees(cache.back(), static_cast<int>(cache.size()) + 1));
    return cache[static_cast<size_t>(n - 1)];
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 10) throw std::invalid_argument("for_each_connected_graph: n must be 1..10");
    for (const Graph& g : connected_level(n)) fn(g);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_connected_graphs: n must be 1..10");
    return connected_level(n);
}

void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 14) throw std::invalid_argument("for_each_tree: n must be 1..14");
    for (const Graph& g : tree_level(n)) fn(g);
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("enumerate_trees: n must be 1..14");
    return tree_level(n);
}

}  // namespace sgt
