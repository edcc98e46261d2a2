#include "pratio/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace pratio {

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    const int header = static_cast<unsigned char>(line[0]);
    if (header == 126) throw std::invalid_argument("graph6: long form (n > 62) is not supported");
    if (header < kBias || header > 126) throw std::invalid_argument("graph6: bad header byte");
    const int n = header - kBias;
    if (n < 1) throw std::invalid_argument("graph6: graph must have at least one vertex");

    const std::string_view body = line.substr(1);
    if (body.size() != payload_bytes(n))
        throw std::invalid_argument("graph6: expected " + std::to_string(payload_bytes(n)) +
                                    " data bytes for n=" + std::to_string(n) + ", got " +
                                    std::to_string(body.size()));

    std::vector<Edge> edges;
    std::size_t bit = 0;
    auto next_bit = [&] {
        const int c = static_cast<unsigned char>(body[bit / 6]);
        return ((c - kBias) >> (5 - bit % 6)) & 1;
    };
    for (char ch : body) {
        const int c = static_cast<unsigned char>(ch);
        if (c < kBias || c > 126) throw std::invalid_argument("graph6: character out of range");
    }
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (next_bit()) edges.emplace_back(u, v);
    for (; bit < body.size() * 6; ++bit)
        if (next_bit()) throw std::invalid_argument("graph6: nonzero padding bits");
    return build_graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6: n > 62 needs the long form");
    std::string out;
    out.reserve(1 + payload_bytes(n));
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace pratio
