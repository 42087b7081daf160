#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exgroup/error.hpp"

namespace exg {

/// Undirected loopless graph on indexed vertices, adjacency held as packed
/// bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int v)
        : v_(v), words_((size_t(v) + 63) / 64), bits_(size_t(v) * ((size_t(v) + 63) / 64), 0) {
        require(v >= 0, errc::invalid_parameters, "negative vertex count");
    }

    int vertex_count() const { return v_; }
    int words_per_row() const { return int(words_); }
    const std::uint64_t* row(int a) const { return bits_.data() + size_t(a) * words_; }

    bool adjacent(int a, int b) const {
        return (row(a)[size_t(b) >> 6] >> (b & 63)) & 1u;
    }

    void add_edge(int a, int b) {
        require(a != b, errc::invalid_parameters, "loops are not allowed");
        set_bit(a, b);
        set_bit(b, a);
    }

    int degree(int a) const;
    long long edge_count() const;

private:
    void set_bit(int a, int b) {
        bits_[size_t(a) * words_ + (size_t(b) >> 6)] |= std::uint64_t(1) << (b & 63);
    }
    int v_ = 0;
    size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct SrgParameters {
    long long v = 0, k = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParameters&) const = default;
};

enum class SrgStatus {
    srg,
    not_srg,          // a degree or common-neighbor count is non-constant
    not_connected,    // degenerate: the graph is disconnected
    not_coconnected,  // degenerate: the complement is disconnected
};

const char* srg_status_name(SrgStatus s);

struct SrgCheck {
    SrgStatus status = SrgStatus::not_srg;
    SrgParameters params{};           // set when status == srg
    int witness_a = -1, witness_b = -1; // offending pair for not_srg
    std::string detail;

    bool ok() const { return status == SrgStatus::srg; }
    bool degenerate() const {
        return status == SrgStatus::not_connected || status == SrgStatus::not_coconnected;
    }
};

/// Checks regularity, connectivity of the graph and its complement, and
/// constancy of common-neighbor counts over adjacent and nonadjacent pairs.
/// Requires v >= 2.
SrgCheck srg_parameters(const Graph& graph, int threads = 1);

bool graph_connected(const Graph& graph);
bool complement_connected(const Graph& graph);

} // namespace exg
