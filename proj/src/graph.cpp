#include "exgroup/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "exgroup/parallel.hpp"

namespace exg {

int Graph::degree(int a) const {
    const std::uint64_t* r = row(a);
    int total = 0;
    for (size_t w = 0; w < words_; ++w) total += std::popcount(r[w]);
    return total;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int a = 0; a < v_; ++a) twice += degree(a);
    return twice / 2;
}

const char* srg_status_name(SrgStatus s) {
    switch (s) {
        case SrgStatus::srg: return "srg";
        case SrgStatus::not_srg: return "not_srg";
        case SrgStatus::not_connected: return "not_connected";
        case SrgStatus::not_coconnected: return "not_coconnected";
    }
    return "?";
}

bool graph_connected(const Graph& graph) {
    const int v = graph.vertex_count();
    if (v == 0) return true;
    std::vector<char> seen(size_t(v), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < v; ++w)
            if (!seen[size_t(w)] && graph.adjacent(u, w)) {
                seen[size_t(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == v;
}

bool complement_connected(const Graph& graph) {
    const int v = graph.vertex_count();
    if (v == 0) return true;
    // BFS on the implicit complement: keep the unvisited set and scan it.
    std::vector<int> unvisited;
    unvisited.reserve(size_t(v) - 1);
    for (int w = 1; w < v; ++w) unvisited.push_back(w);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        size_t kept = 0;
        for (size_t t = 0; t < unvisited.size(); ++t) {
            const int w = unvisited[t];
            if (w != u && !graph.adjacent(u, w))
                stack.push_back(w);
            else
                unvisited[kept++] = w;
        }
        unvisited.resize(kept);
    }
    return unvisited.empty();
}

namespace {

int common_neighbors(const Graph& graph, int a, int b) {
    const std::uint64_t* ra = graph.row(a);
    const std::uint64_t* rb = graph.row(b);
    int total = 0;
    for (int w = 0; w < graph.words_per_row(); ++w) total += std::popcount(ra[w] & rb[w]);
    return total;
}

} // namespace

SrgCheck srg_parameters(const Graph& graph, int threads) {
    const int v = graph.vertex_count();
    require(v >= 2, errc::invalid_parameters, "need at least two vertices");
    threads = resolve_threads(threads);

    SrgCheck out;
    const int k = graph.degree(0);
    for (int a = 1; a < v; ++a)
        if (graph.degree(a) != k) {
            out.status = SrgStatus::not_srg;
            out.witness_a = 0;
            out.witness_b = a;
            out.detail = "vertex degrees differ";
            return out;
        }

    if (!graph_connected(graph)) {
        out.status = SrgStatus::not_connected;
        out.detail = "graph is not connected";
        return out;
    }
    if (!complement_connected(graph)) {
        out.status = SrgStatus::not_coconnected;
        out.detail = "complement is not connected";
        return out;
    }

    // after both connectivity checks there is at least one pair of each kind
    long long lambda = -1, mu = -1;
    for (int a = 0; a < v && (lambda < 0 || mu < 0); ++a)
        for (int b = a + 1; b < v && (lambda < 0 || mu < 0); ++b) {
            if (graph.adjacent(a, b)) {
                if (lambda < 0) lambda = common_neighbors(graph, a, b);
            } else if (mu < 0) {
                mu = common_neighbors(graph, a, b);
            }
        }

    // first violating pair in lexicographic order, schedule-independent
    std::atomic<std::int64_t> first_bad{std::int64_t(v) * v};
    parallel_chunks(v, threads, [&](std::int64_t lo, std::int64_t hi) {
        for (int a = int(lo); a < int(hi); ++a) {
            for (int b = a + 1; b < v; ++b) {
                const long long c = common_neighbors(graph, a, b);
                const long long want = graph.adjacent(a, b) ? lambda : mu;
                if (c != want) {
                    std::int64_t cand = std::int64_t(a) * v + b;
                    std::int64_t cur = first_bad.load();
                    while (cand < cur && !first_bad.compare_exchange_weak(cur, cand)) {
                    }
                    return;
                }
            }
        }
    });
    const std::int64_t bad = first_bad.load() < std::int64_t(v) * v ? first_bad.load() : -1;
    if (bad >= 0) {
        out.status = SrgStatus::not_srg;
        out.witness_a = int(bad / v);
        out.witness_b = int(bad % v);
        out.detail = graph.adjacent(out.witness_a, out.witness_b)
                         ? "common-neighbor count differs on adjacent pairs"
                         : "common-neighbor count differs on nonadjacent pairs";
        return out;
    }

    out.status = SrgStatus::srg;
    out.params = SrgParameters{v, k, lambda, mu};
    require(out.params.k * (out.params.k - out.params.lambda - 1) ==
                (out.params.v - out.params.k - 1) * out.params.mu,
            errc::internal, "srg feasibility identity violated");
    return out;
}

} // namespace exg
