#include "sdt/graph6.hpp"

#include <stdexcept>

namespace sdt {

// graph6 packs the upper triangle in column order: (0,1), (0,2), (1,2),
// (0,3), ... Six bits per printable character, offset by 63.

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62)
        throw cap_error("graph6 encoding supports order <= 62");
    std::string out;
    out.push_back(char(63 + n));
    int bit = 5;
    char cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (g.adjacent(row, col))
                cur |= char(1 << bit);
            if (--bit < 0) {
                out.push_back(char(63 + cur));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5)
        out.push_back(char(63 + cur));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");
    unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)
        throw cap_error("graph6: multi-byte order header (n > 62) unsupported");
    if (head < 63 || head > 126)
        throw std::invalid_argument("graph6: header byte out of range");
    int n = head - 63;
    if (n < 1)
        throw std::invalid_argument("graph6: order must be at least 1");
    std::size_t pairs = std::size_t(n) * (n - 1) / 2;
    std::size_t payload = (pairs + 5) / 6;
    if (text.size() != 1 + payload)
        throw std::invalid_argument("graph6: payload length mismatch");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            unsigned char c = static_cast<unsigned char>(text[1 + bit_index / 6]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: payload byte out of range");
            int value = c - 63;
            if ((value >> (5 - int(bit_index % 6))) & 1)
                edges.emplace_back(row, col);
        }
    }
    // Trailing padding bits must be zero.
    for (; bit_index < payload * 6; ++bit_index) {
        unsigned char c = static_cast<unsigned char>(text[1 + bit_index / 6]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: payload byte out of range");
        if (((c - 63) >> (5 - int(bit_index % 6))) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

}  // namespace sdt
