#include "lir/graph6.hpp"

#include <cstring>

namespace lir {

namespace {

constexpr int G6_LO = 63;   // '?'
constexpr int G6_HI = 126;  // '~'

[[noreturn]] void fail(size_t offset, const std::string& what) {
    throw parse_error("graph6: " + what + " at byte " + std::to_string(offset));
}

int byte_at(const std::string& s, size_t i) {
    if (i >= s.size()) fail(i, "unexpected end of input");
    unsigned char c = (unsigned char)s[i];
    if (c < G6_LO || c > G6_HI) fail(i, "character out of printable range");
    return c - G6_LO;
}

}  // namespace

Multigraph parse_graph6(const std::string& text_in) {
    std::string text = text_in;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    size_t pos = 0;
    const std::string prefix = ">>graph6<<";
    if (text.rfind(prefix, 0) == 0) pos = prefix.size();

    long long n;
    if (pos >= text.size()) fail(pos, "empty input");
    int first = byte_at(text, pos);
    if ((unsigned char)text[pos] != 126) {
        n = first;
        ++pos;
    } else {
        ++pos;
        if (pos < text.size() && (unsigned char)text[pos] == 126) {
            // 8-byte header, n up to 2^36; far beyond desk scale but cheap.
            ++pos;
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(text, pos++);
        } else {
            n = 0;
            for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(text, pos++);
        }
    }
    if (n > 100000) fail(0, "vertex count implausibly large");

    std::vector<EdgeInput> edges;
    int bits_left = 0, cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bits_left == 0) {
                cur = byte_at(text, pos);
                ++pos;
                bits_left = 6;
            }
            if (cur & (1 << (bits_left - 1))) edges.push_back({u, v, 1});
            --bits_left;
        }
    // Trailing padding bits must be zero and no extra bytes may follow.
    if (cur & ((1 << bits_left) - 1)) fail(pos - 1, "nonzero padding bits");
    if (pos != text.size()) fail(pos, "trailing bytes after adjacency data");
    return Multigraph::from_edges((int)n, edges);
}

std::string emit_graph6(const Multigraph& g) {
    if (!g.is_simple()) throw error("graph6 encodes simple graphs only");
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back((char)(n + G6_LO));
    } else if (n <= 258047) {
        out.push_back((char)126);
        out.push_back((char)(((n >> 12) & 63) + G6_LO));
        out.push_back((char)(((n >> 6) & 63) + G6_LO));
        out.push_back((char)((n & 63) + G6_LO));
    } else {
        throw error("graph too large for this emitter");
    }
    int bits = 0, cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back((char)(cur + G6_LO));
                bits = 0;
                cur = 0;
            }
        }
    if (bits > 0) out.push_back((char)((cur << (6 - bits)) + G6_LO));
    return out;
}

}  // namespace lir
