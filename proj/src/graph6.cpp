#include "itree/graph6.hpp"

#include <stdexcept>

namespace itree {

namespace {

constexpr int kMaxOrder = 258047;
constexpr std::string_view kBanner = ">>graph6<<";

[[noreturn]] void bad(const std::string& why) {
    throw std::invalid_argument("graph6: " + why);
}

int payload_byte(unsigned char c) {
    if (c < 63 || c > 126) bad("byte out of range 63..126");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kBanner.size()) == kBanner) line.remove_prefix(kBanner.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) bad("empty line");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') bad("orders above 258047 are not supported");
        if (line.size() < 4) bad("truncated order field");
        n = (static_cast<long long>(payload_byte(line[1])) << 12) |
            (static_cast<long long>(payload_byte(line[2])) << 6) |
            static_cast<long long>(payload_byte(line[3]));
        if (n < 63) bad("long order field used for small order");
        pos = 4;
    } else {
        n = payload_byte(line[0]);
        pos = 1;
    }
    if (n > kMaxOrder) bad("order too large");

    const long long bits = n * (n - 1) / 2;
    const long long groups = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) < groups)
        bad("truncated edge bits");
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) > groups)
        bad("trailing bytes after edge bits");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int u = 0, v = 1;  // column order: (0,1), (0,2), (1,2), (0,3), ...
    for (long long gi = 0; gi < groups; ++gi) {
        int value = payload_byte(line[pos + static_cast<std::size_t>(gi)]);
        for (int s = 5; s >= 0; --s, ++bit) {
            if (bit >= bits) {
                if ((value >> s) & 1) bad("nonzero padding bits");
                continue;
            }
            if ((value >> s) & 1) edges.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.n();
    if (n > kMaxOrder) bad("order too large to encode; use the edge list format");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace itree
