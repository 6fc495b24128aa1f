#include "sgt/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace sgt {

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty line");
    for (char ch : s)
        if (ch < 63 || ch > 126)
            throw std::invalid_argument("graph6: byte outside 63..126");
    if (s[0] == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    int n = s[0] - 63;
    size_t bits_needed = static_cast<size_t>(n) * (n - 1) / 2;
    size_t bytes_needed = (bits_needed + 5) / 6;
    if (s.size() != 1 + bytes_needed)
        throw std::invalid_argument("graph6: payload length mismatch");
    std::vector<Edge> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    // padding bits must be zero
    for (; bit < bytes_needed * 6; ++bit) {
        int byte = s[1 + bit / 6] - 63;
        if ((byte >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph::from_edge_list(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: order above 62; use edge-list text");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t bytes = (bits + 5) / 6;
    std::vector<int> payload(bytes, 0);
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) payload[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : payload) out.push_back(static_cast<char>(b + 63));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    // strip comments, then read tokens
    std::vector<long> nums;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long v;
        while (ls >> v) nums.push_back(v);
    }
    if (nums.size() < 2) throw std::invalid_argument("edge list: missing header \"n m\"");
    long n = nums[0], m = nums[1];
    if (n < 0 || n > Graph::kMaxVertices) throw std::invalid_argument("edge list: bad order");
    if (static_cast<long>(nums.size()) != 2 + 2 * m)
        throw std::invalid_argument("edge list: token count does not match m");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i)
        edges.emplace_back(static_cast<int>(nums[2 + 2 * i]), static_cast<int>(nums[3 + 2 * i]));
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    auto edges = g.edges();
    os << g.order() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace sgt
