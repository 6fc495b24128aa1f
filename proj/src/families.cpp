#include "sgt/families.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sgt/matching.hpp"
#include "sgt/spectral.hpp"

namespace sgt {

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1 required");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: n >= 1 required");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(n, e);
}

Graph caterpillar(const std::vector<int>& hairs) {
    if (hairs.empty()) throw std::invalid_argument("caterpillar: empty hair profile");
    int k = static_cast<int>(hairs.size());
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i) {
        if (hairs[static_cast<size_t>(i)] < 0)
            throw std::invalid_argument("caterpillar: negative hair count");
        for (int h = 0; h < hairs[static_cast<size_t>(i)]; ++h) e.emplace_back(i, next++);
    }
    return Graph::from_edge_list(next, e);
}

Graph c3aaa(int a) {
    if (a < 0) throw std::invalid_argument("c3aaa: a >= 0 required");
    std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}};
    int next = 3;
    for (int v = 0; v < 3; ++v)
        for (int h = 0; h < a; ++h) e.emplace_back(v, next++);
    return Graph::from_edge_list(next, e);
}

Graph y6() {
    return Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

Graph fig2_graph() {
    Graph g = Graph::from_edge_list(1, {});  // w = 0
    for (int i = 0; i < 3; ++i) g = join_bridge(g, 0, star(5), 0);        // K_{1,4} centers
    for (int i = 0; i < 2; ++i) g = join_bridge(g, 0, y6(), 0);           // degree-3 vertex
    for (int i = 0; i < 2; ++i) g = join_bridge(g, 0, c3aaa(2), 0);       // cycle vertex
    for (int i = 0; i < 5; ++i) g = join_bridge(g, 0, Graph::from_edge_list(1, {}), 0);
    return g;
}

std::optional<int> is_c3aaa(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_c3aaa: disconnected input");
    int n = g.order();
    if (n < 3 || n % 3 != 0) return std::nullopt;
    int a = n / 3 - 1;
    std::vector<int> core;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == a + 2)
            core.push_back(v);
        else if (d != 1)
            return std::nullopt;
    }
    if (a == 0) core = {0, 1, 2};  // plain triangle: every vertex has degree 2 = a + 2
    if (core.size() != 3) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!g.has_edge(core[static_cast<size_t>(i)], core[static_cast<size_t>(j)]))
                return std::nullopt;
    for (int v : core)
        if (g.degree(v) != a + 2) return std::nullopt;
    if (g.edge_count() != 3 + 3 * a) return std::nullopt;
    return a;
}

bool is_c5(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_c5: disconnected input");
    if (g.order() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_star(const Graph& g) {
    int n = g.order();
    if (n < 1) return false;
    if (!is_tree(g)) return false;
    if (n <= 2) return true;
    int centers = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == n - 1)
            ++centers;
        else if (d != 1)
            return false;
    }
    return centers == 1;
}

bool is_tree_diam_le3(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_tree_diam_le3: disconnected input");
    return is_tree(g) && diameter(g) <= 3;
}

std::optional<std::vector<int>> is_caterpillar(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("is_caterpillar: not a tree");
    int n = g.order();
    std::vector<int> spine;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2) spine.push_back(v);
    if (spine.empty()) return std::vector<int>{};  // K1 or K2
    std::uint64_t spine_mask = 0;
    for (int v : spine) spine_mask |= 1ull << v;
    // the spine must induce a path
    std::vector<int> ends;
    for (int v : spine) {
        int d = popcount64(g.neighbors(v) & spine_mask);
        if (d > 2) return std::nullopt;
        if (d <= 1) ends.push_back(v);
    }
    if (spine.size() == 1) return std::vector<int>{spine[0]};
    if (ends.size() != 2) return std::nullopt;
    std::vector<int> order = {std::min(ends[0], ends[1])};
    std::uint64_t seen = 1ull << order[0];
    while (order.size() < spine.size()) {
        std::uint64_t nxt = g.neighbors(order.back()) & spine_mask & ~seen;
        if (!nxt) return std::nullopt;  // spine disconnected
        int v = std::countr_zero(nxt);
        order.push_back(v);
        seen |= 1ull << v;
    }
    return order;
}

std::string Classification::tag_name() const {
    switch (tag) {
        case Tag::C3aaa: return "C3aaa";
        case Tag::C5: return "C5";
        case Tag::TreeDiamAtMost3: return "TreeDiamAtMost3";
        case Tag::Caterpillar456: return "Caterpillar456";
        case Tag::Thm12FormB: return "Thm12FormB";
        case Tag::Thm32Form: return "Thm32Form";
        case Tag::Thm33Form: return "Thm33Form";
        case Tag::NotExtremal: return "NotExtremal";
    }
    return "?";
}

Classification classify_thm31_equality(const Graph& g) {
    Classification c;
    if (auto a = is_c3aaa(g)) {
        c.tag = Classification::Tag::C3aaa;
        c.a = *a;
        return c;
    }
    if (is_c5(g)) {
        c.tag = Classification::Tag::C5;
        return c;
    }
    if (is_tree_diam_le3(g)) {
        c.tag = Classification::Tag::TreeDiamAtMost3;
        return c;
    }
    return c;
}

namespace {

struct HubSplit {
    std::vector<InducedSubgraph> parts;  // nontrivial components of g - w
    std::uint64_t isolated = 0;
    std::vector<int> plus_w_diam;        // diameter of part + w
};

HubSplit split_at(const Graph& g, int w) {
    HubSplit out;
    auto sub = delete_vertices(g, 1ull << w);
    auto comps = connected_components(sub.graph);
    for (std::uint64_t iso = comps.isolated; iso; iso &= iso - 1)
        out.isolated |= 1ull << sub.to_parent[static_cast<size_t>(std::countr_zero(iso))];
    for (auto& part : comps.nontrivial) {
        std::uint64_t orig = 1ull << w;
        std::vector<int> to_orig;
        for (int v : part.to_parent) {
            orig |= 1ull << sub.to_parent[static_cast<size_t>(v)];
        }
        auto with_w = induced_subgraph(g, orig);
        out.plus_w_diam.push_back(is_connected(with_w.graph) ? diameter(with_w.graph) : -1);
        // re-extract the part against the original labels for stable witnesses
        InducedSubgraph relabeled;
        relabeled.graph = part.graph;
        for (int v : part.to_parent)
            relabeled.to_parent.push_back(sub.to_parent[static_cast<size_t>(v)]);
        out.parts.push_back(std::move(relabeled));
    }
    return out;
}

// Shared diameter side condition of the decomposition forms: either some
// part reaches diameter 2 with the hub attached, or there are no isolated
// vertices and every part reaches exactly diameter 3.
bool hub_diam_condition(const HubSplit& split) {
    for (int d : split.plus_w_diam)
        if (d == 2) return true;
    if (split.isolated) return false;
    for (int d : split.plus_w_diam)
        if (d != 3) return false;
    return !split.plus_w_diam.empty();
}

}  // namespace

Classification classify_thm12(const Graph& t, const AlgNum& lambda) {
    if (!is_tree(t)) throw std::invalid_argument("classify_thm12: not a tree");
    if (lambda.is_zero()) throw std::invalid_argument("classify_thm12: lambda must be nonzero");
    Classification out;

    if (auto backbone = is_caterpillar(t)) {
        int d = diameter(t);
        if (d >= 4 && d <= 6) {
            bool ok = true;
            if (d == 6) {
                // center of the 5-vertex backbone must have degree 2
                int center = (*backbone)[backbone->size() / 2];
                ok = t.degree(center) == 2;
            }
            if (ok) {
                out.tag = Classification::Tag::Caterpillar456;
                out.diameter = d;
                out.backbone = *backbone;
                return out;
            }
        }
    }

    for (int w = 0; w < t.order(); ++w) {
        HubSplit split = split_at(t, w);
        if (split.parts.size() < 3) continue;
        bool ok = true;
        for (auto& part : split.parts) {
            if (!is_tree_diam_le3(part.graph) || !is_eigenvalue(part.graph, lambda)) {
                ok = false;
                break;
            }
        }
        if (!ok || !hub_diam_condition(split)) continue;
        out.tag = Classification::Tag::Thm12FormB;
        out.w = w;
        out.s = static_cast<int>(split.parts.size());
        out.isolated = split.isolated;
        return out;
    }
    return out;
}

Classification classify_thm32(const Graph& g, const AlgNum& lambda) {
    if (!is_connected(g)) throw std::invalid_argument("classify_thm32: disconnected input");
    if (diameter(g) < 4) throw std::invalid_argument("classify_thm32: diameter below 4");
    if (lambda.is_zero()) throw std::invalid_argument("classify_thm32: lambda must be nonzero");
    int bprime = induced_matching_number(g).size;
    if (bprime < 3) throw std::invalid_argument("classify_thm32: beta' below 3");
    int c = cyclomatic_number(g);

    Classification out;
    for (int w = 0; w < g.order(); ++w) {
        HubSplit split = split_at(g, w);
        if (static_cast<int>(split.parts.size()) != bprime) continue;
        std::vector<int> cyc_a;
        bool ok = true;
        for (auto& part : split.parts) {
            if (auto a = is_c3aaa(part.graph)) {
                if (multiplicity(part.graph, lambda) != 2) {
                    ok = false;
                    break;
                }
                cyc_a.push_back(*a);
            } else if (is_tree_diam_le3(part.graph)) {
                if (multiplicity(part.graph, lambda) != 1) {
                    ok = false;
                    break;
                }
            } else {
                ok = false;
                break;
            }
        }
        if (!ok || static_cast<int>(cyc_a.size()) != c) continue;
        if (!hub_diam_condition(split)) continue;
        out.tag = Classification::Tag::Thm32Form;
        out.w = w;
        out.s = bprime;
        out.cyclic_part_a = cyc_a;
        out.isolated = split.isolated;
        return out;
    }
    return out;
}

Classification classify_thm33(const Graph& g, const AlgNum& lambda) {
    if (!is_connected(g)) throw std::invalid_argument("classify_thm33: disconnected input");
    if (lambda.is_zero()) throw std::invalid_argument("classify_thm33: lambda must be nonzero");
    if (induced_matching_number(g).size < 3)
        throw std::invalid_argument("classify_thm33: beta' below 3");

    Classification out;
    // lambda^2 must be a positive integer t
    AlgNum refined = lambda;
    refined.refine_to(Rat(1, 4));
    Rat sq_lo = refined.lo() * refined.lo(), sq_hi = refined.hi() * refined.hi();
    if (sq_lo > sq_hi) std::swap(sq_lo, sq_hi);
    long t_found = -1;
    long t_min = std::max(1L, static_cast<long>(mpz_class(sq_lo.get_num() / sq_lo.get_den()).get_si()));
    long t_max = static_cast<long>(mpz_class(sq_hi.get_num() / sq_hi.get_den()).get_si()) + 1;
    for (long t = t_min; t <= t_max; ++t) {
        if (is_root_of(lambda, IntPoly{static_cast<long>(-t), 0, 1})) {
            t_found = t;
            break;
        }
    }
    if (t_found < 1) return out;

    for (int w = 0; w < g.order(); ++w) {
        HubSplit split = split_at(g, w);
        if (split.isolated || split.parts.size() < 3) continue;
        bool ok = true;
        for (size_t i = 0; i < split.parts.size(); ++i) {
            const Graph& part = split.parts[i].graph;
            if (part.order() != static_cast<int>(t_found) + 1 || !is_star(part)) {
                ok = false;
                break;
            }
            // part + w must again be a star (w hangs off the center only)
            std::uint64_t orig = 1ull << w;
            for (int v : split.parts[i].to_parent) orig |= 1ull << v;
            if (!is_star(induced_subgraph(g, orig).graph)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        out.tag = Classification::Tag::Thm33Form;
        out.w = w;
        out.t = static_cast<int>(t_found);
        out.s = static_cast<int>(split.parts.size());
        return out;
    }
    return out;
}

}  // namespace sgt
