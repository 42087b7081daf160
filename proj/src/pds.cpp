#include "exgroup/pds.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "exgroup/parallel.hpp"

namespace exg {

Graph cayley_graph(const Group& g, const GroupSubset& x) {
    require(x.parent_order() == g.n, errc::invalid_parameters, "set/group order mismatch");
    require(!x.contains(g.identity), errc::bad_connection_set,
            "connection set contains the identity");
    const auto elems = x.elements();
    for (int e : elems)
        require(x.contains(g.inv[size_t(e)]), errc::bad_connection_set,
                "connection set is not inverse-closed at element " + std::to_string(e));

    Graph out(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int e : elems) out.add_edge(v, g.mul(e, v)); // (e v) v^-1 = e in X
    return out;
}

const char* pds_status_name(PdsStatus s) {
    switch (s) {
        case PdsStatus::pds: return "pds";
        case PdsStatus::contains_identity: return "contains_identity";
        case PdsStatus::not_inverse_closed: return "not_inverse_closed";
        case PdsStatus::not_pds: return "not_pds";
        case PdsStatus::does_not_generate: return "does_not_generate";
        case PdsStatus::degenerate: return "degenerate";
    }
    return "?";
}

PdsCheck check_regular_pds(const Group& g, const GroupSubset& x, int threads) {
    require(x.parent_order() == g.n, errc::invalid_parameters, "set/group order mismatch");
    const auto elems = x.elements();
    require(!elems.empty(), errc::empty_set, "check_regular_pds needs a nonempty set");
    const int n = g.n;

    PdsCheck out;
    if (x.contains(g.identity)) {
        out.status = PdsStatus::contains_identity;
        out.detail = "the identity lies in the set";
        return out;
    }
    for (int e : elems)
        if (!x.contains(g.inv[size_t(e)])) {
            out.status = PdsStatus::not_inverse_closed;
            out.witness_g1 = e;
            out.detail = "inverse of element " + std::to_string(e) + " is missing";
            return out;
        }

    std::vector<long long> d(size_t(n), 0);
    for (int a : elems) {
        const std::int32_t* row = g.row(a);
        for (int b : elems) d[size_t(row[g.inv[size_t(b)]])]++;
    }

    const long long lambda = d[size_t(elems[0])];
    for (int e : elems)
        if (d[size_t(e)] != lambda) {
            out.status = PdsStatus::not_pds;
            out.witness_g1 = elems[0];
            out.witness_g2 = e;
            out.detail = "difference count is non-constant on the set: d(" +
                         std::to_string(elems[0]) + ")=" + std::to_string(lambda) + " but d(" +
                         std::to_string(e) + ")=" + std::to_string(d[size_t(e)]);
            return out;
        }

    const int k = int(elems.size());
    int first_outside = -1;
    for (int v = 0; v < n; ++v)
        if (v != g.identity && !x.contains(v)) {
            first_outside = v;
            break;
        }
    const long long mu = first_outside >= 0 ? d[size_t(first_outside)] : 0;
    for (int v = 0; v < n; ++v) {
        if (v == g.identity || x.contains(v)) continue;
        if (d[size_t(v)] != mu) {
            out.status = PdsStatus::not_pds;
            out.witness_g1 = first_outside;
            out.witness_g2 = v;
            out.detail = "difference count is non-constant off the set: d(" +
                         std::to_string(first_outside) + ")=" + std::to_string(mu) + " but d(" +
                         std::to_string(v) + ")=" + std::to_string(d[size_t(v)]);
            return out;
        }
    }

    const GroupSubset generated = generated_subgroup(g, x);
    if (generated.size() != n) {
        out.status = PdsStatus::does_not_generate;
        out.detail = "the set generates a subgroup of order " + std::to_string(generated.size());
        return out;
    }

    if (k > n - 2) {
        out.status = PdsStatus::degenerate;
        out.detail = "set size " + std::to_string(k) + " exceeds v-2 (complete graph)";
        return out;
    }
    if (mu == 0) {
        out.status = PdsStatus::degenerate;
        out.detail = "mu = 0 (disjoint union of cliques)";
        return out;
    }

    // cross-validate against the Cayley-graph route
    const SrgCheck sc = srg_parameters(cayley_graph(g, x), threads);
    if (sc.degenerate()) {
        out.status = PdsStatus::degenerate;
        out.detail = sc.detail;
        return out;
    }
    require(sc.ok(), errc::internal, "constant difference counts but Cayley graph not SRG");
    require(sc.params == SrgParameters{n, k, lambda, mu}, errc::internal,
            "difference counts disagree with Cayley-graph parameters");

    out.status = PdsStatus::pds;
    out.certificate = PdsCertificate{n, k, lambda, mu, true, true, x};
    return out;
}

namespace {

struct SearchItem {
    int a = -1, b = -1; // b < 0 for involutions
    int weight() const { return b < 0 ? 1 : 2; }
};

struct SearchState {
    const Group* g;
    std::vector<char> member;
    std::vector<int> cur; // current elements, unsorted
    std::vector<long long> d;
    int k = 0;

    explicit SearchState(const Group& group)
        : g(&group), member(size_t(group.n), 0), d(size_t(group.n), 0) {}

    void add(int z) {
        const int zi = g->inv[size_t(z)];
        for (int x : cur) {
            d[size_t(g->mul(x, zi))]++;
            d[size_t(g->mul(z, g->inv[size_t(x)]))]++;
        }
        d[size_t(g->identity)]++;
        member[size_t(z)] = 1;
        cur.push_back(z);
        ++k;
    }

    void remove(int z) {
        member[size_t(z)] = 0;
        cur.erase(std::find(cur.begin(), cur.end(), z));
        --k;
        const int zi = g->inv[size_t(z)];
        for (int x : cur) {
            d[size_t(g->mul(x, zi))]--;
            d[size_t(g->mul(z, g->inv[size_t(x)]))]--;
        }
        d[size_t(g->identity)]--;
    }

    void toggle(const SearchItem& item) {
        if (member[size_t(item.a)]) {
            remove(item.a);
            if (item.b >= 0) remove(item.b);
        } else {
            add(item.a);
            if (item.b >= 0) add(item.b);
        }
    }

    /// Sound pre-filter: constant counts, mu >= 1, k <= v-2.
    bool plausible() const {
        const int n = g->n;
        if (k == 0 || k > n - 2) return false;
        const long long lambda = d[size_t(cur[0])];
        // feasibility identity with sampled values before the full scan
        int first_outside = -1;
        for (int v = 0; v < n; ++v)
            if (v != g->identity && !member[size_t(v)]) {
                first_outside = v;
                break;
            }
        const long long mu = d[size_t(first_outside)];
        if (mu == 0) return false;
        if ((long long)k * (k - lambda - 1) != (long long)(n - k - 1) * mu) return false;
        for (int v = 0; v < n; ++v) {
            if (v == g->identity) continue;
            if (d[size_t(v)] != (member[size_t(v)] ? lambda : mu)) return false;
        }
        return true;
    }
};

} // namespace

std::vector<PdsCertificate> search_regular_pds(const Group& g, const PdsSearchOptions& opts) {
    const int n = g.n;
    std::vector<SearchItem> items;
    for (int a = 0; a < n; ++a) {
        if (a == g.identity) continue;
        const int ai = g.inv[size_t(a)];
        if (ai == a)
            items.push_back({a, -1});
        else if (a < ai)
            items.push_back({a, ai});
    }
    std::sort(items.begin(), items.end(),
              [](const SearchItem& p, const SearchItem& q) { return p.a < q.a; });

    const int f = int(items.size());
    require(f <= opts.max_free_bits, errc::search_space_too_large,
            std::to_string(f) + " free choices exceed the limit of " +
                std::to_string(opts.max_free_bits));
    require(f <= 62, errc::search_space_too_large,
            "search space cannot be enumerated at all beyond 62 free choices");

    const std::uint64_t total = std::uint64_t(1) << f;
    const int threads = resolve_threads(opts.threads);

    std::vector<std::vector<PdsCertificate>> found(static_cast<size_t>(threads));
    const std::uint64_t chunk = (total + std::uint64_t(threads) - 1) / std::uint64_t(threads);
    parallel_chunks(threads, threads, [&](std::int64_t wlo, std::int64_t whi) {
        for (std::int64_t w = wlo; w < whi; ++w) {
            const std::uint64_t begin = std::uint64_t(w) * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin >= end) continue;
            SearchState st(g);
            const std::uint64_t gray = begin ^ (begin >> 1);
            for (int t = 0; t < f; ++t)
                if ((gray >> t) & 1u) st.toggle(items[size_t(t)]);
            for (std::uint64_t code = begin; code < end; ++code) {
                // successive Gray codes differ in bit ctz(code)
                if (code != begin) st.toggle(items[size_t(std::countr_zero(code))]);
                if (st.k == 0) continue;
                if (opts.size_filter && st.k != *opts.size_filter) continue;
                if (!st.plausible()) continue;
                GroupSubset x(n, st.cur);
                PdsCheck check = check_regular_pds(g, x);
                if (check.ok()) found[size_t(w)].push_back(std::move(*check.certificate));
            }
        }
    });

    std::vector<PdsCertificate> out;
    for (auto& part : found)
        for (auto& cert : part) out.push_back(std::move(cert));
    std::sort(out.begin(), out.end(), [](const PdsCertificate& a, const PdsCertificate& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.set.elements() < b.set.elements();
    });
    if (opts.limit && int(out.size()) > *opts.limit) out.resize(size_t(*opts.limit));
    return out;
}

} // namespace exg
