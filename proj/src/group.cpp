#include "exgroup/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace exg {

GroupSubset::GroupSubset(int parent_order, const std::vector<int>& elements)
    : GroupSubset(parent_order) {
    for (int g : elements) {
        require(g >= 0 && g < parent_order, errc::invalid_parameters,
                "subset element " + std::to_string(g) + " out of range");
        insert(g);
    }
}

int GroupSubset::size() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

std::vector<int> GroupSubset::elements() const {
    std::vector<int> out;
    out.reserve(size_t(size()));
    for (int g = 0; g < n_; ++g)
        if (contains(g)) out.push_back(g);
    return out;
}

GroupSubset Group::full_subset() const {
    GroupSubset s(n);
    for (int g = 0; g < n; ++g) s.insert(g);
    return s;
}

namespace {

void check_latin(int n, const std::vector<std::int32_t>& table) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = table[size_t(a) * size_t(n) + size_t(b)];
            require(v >= 0 && v < n, errc::not_a_group,
                    "entry at (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
            if (seen[size_t(v)])
                fail(errc::not_a_group, "row " + std::to_string(a) + " is not a permutation");
            seen[size_t(v)] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = table[size_t(a) * size_t(n) + size_t(b)];
            if (seen[size_t(v)])
                fail(errc::not_a_group, "column " + std::to_string(b) + " is not a permutation");
            seen[size_t(v)] = 1;
        }
    }
}

int locate_identity(int n, const std::vector<std::int32_t>& table) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = table[size_t(e) * size_t(n) + size_t(b)] == b;
        for (int a = 0; a < n && ok; ++a)
            ok = table[size_t(a) * size_t(n) + size_t(e)] == a;
        if (ok) return e;
    }
    fail(errc::not_a_group, "no two-sided identity");
}

void check_associativity(const Group& g, const ValidateOptions& opts) {
    const int n = g.n;
    if (n <= opts.full_assoc_max) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = g.mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                        fail(errc::not_a_group,
                             "associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
            }
        return;
    }
    // Spot check only above the cutoff; seeded so results are reproducible.
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < opts.spot_triples; ++t) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            fail(errc::not_a_group, "associativity spot check fails at (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

} // namespace

Group group_from_cayley_table(int n, std::vector<std::int32_t> table, ValidateOptions opts) {
    require(n >= 1, errc::not_a_group, "order must be positive");
    require(table.size() == size_t(n) * size_t(n), errc::not_a_group, "table size mismatch");
    check_latin(n, table);

    Group g;
    g.n = n;
    g.table = std::move(table);
    g.identity = locate_identity(n, g.table);

    g.inv.assign(size_t(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inv[size_t(a)] = b;
                break;
            }
        }
        if (g.inv[size_t(a)] < 0)
            fail(errc::not_a_group, "element " + std::to_string(a) + " has no two-sided inverse");
    }

    check_associativity(g, opts);
    return g;
}

Group group_from_cayley_table(const std::vector<std::vector<int>>& rows, ValidateOptions opts) {
    const int n = int(rows.size());
    std::vector<std::int32_t> flat;
    flat.reserve(size_t(n) * size_t(n));
    for (const auto& row : rows) {
        require(row.size() == size_t(n), errc::not_a_group, "ragged table");
        for (int v : row) flat.push_back(std::int32_t(v));
    }
    return group_from_cayley_table(n, std::move(flat), opts);
}

namespace {

bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int q = 2; std::int64_t(q) * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

} // namespace

FrobeniusGroup frobenius_subgroup_of_agl(int p, int d, ValidateOptions opts) {
    require(is_prime_int(p), errc::invalid_parameters, std::to_string(p) + " is not prime");
    require(d >= 1 && (p - 1) % d == 0, errc::invalid_parameters,
            std::to_string(d) + " does not divide p-1 = " + std::to_string(p - 1));
    require(std::int64_t(p) * (p - 1) / d <= 20000, errc::too_large,
            "group order p(p-1)/d exceeds the desk-scale cap of 20000");

    // A = d-th power residues, the canonical index-d subgroup of F_p^*.
    std::vector<char> in_a(size_t(p), 0);
    for (int x = 1; x < p; ++x) {
        std::int64_t v = 1;
        for (int e = 0; e < d; ++e) v = v * x % p;
        in_a[size_t(v)] = 1;
    }
    std::vector<int> a_sorted;
    for (int a = 1; a < p; ++a)
        if (in_a[size_t(a)]) a_sorted.push_back(a);
    require(int(a_sorted.size()) == (p - 1) / d, errc::internal, "residue subgroup has wrong size");

    std::vector<int> a_pos(size_t(p), -1);
    for (size_t i = 0; i < a_sorted.size(); ++i) a_pos[size_t(a_sorted[i])] = int(i);

    AffineGroupSpec spec;
    spec.p = p;
    spec.d = d;
    for (int a : a_sorted)
        for (int b = 0; b < p; ++b) spec.elements.emplace_back(a, b);

    const int n = int(spec.elements.size());
    std::vector<std::int32_t> table(size_t(n) * size_t(n));
    // (a,b)o(a',b') = (a a', a b' + b): apply the right factor first.
    for (int i = 0; i < n; ++i) {
        auto [a, b] = spec.elements[size_t(i)];
        for (int j = 0; j < n; ++j) {
            auto [a2, b2] = spec.elements[size_t(j)];
            const int pa = int(std::int64_t(a) * a2 % p);
            const int pb = int((std::int64_t(a) * b2 + b) % p);
            table[size_t(i) * size_t(n) + size_t(j)] = a_pos[size_t(pa)] * p + pb;
        }
    }

    FrobeniusGroup out;
    out.group = group_from_cayley_table(n, std::move(table), opts);
    out.spec = std::move(spec);
    return out;
}

GroupSubset generated_subgroup(const Group& g, const GroupSubset& s) {
    require(s.parent_order() == g.n, errc::invalid_parameters, "subset/group order mismatch");
    std::vector<int> gens;
    for (int x : s.elements()) {
        gens.push_back(x);
        const int xi = g.inv[size_t(x)];
        if (xi != x) gens.push_back(xi);
    }
    GroupSubset members(g.n);
    members.insert(g.identity);
    std::vector<int> frontier{g.identity};
    while (!frontier.empty()) {
        const int a = frontier.back();
        frontier.pop_back();
        for (int x : gens) {
            const int b = g.mul(a, x);
            if (!members.contains(b)) {
                members.insert(b);
                frontier.push_back(b);
            }
        }
    }
    return members;
}

bool is_subgroup(const Group& g, const GroupSubset& h) {
    require(h.parent_order() == g.n, errc::invalid_parameters, "subset/group order mismatch");
    const auto elems = h.elements();
    require(!elems.empty(), errc::empty_set, "is_subgroup needs a nonempty set");
    if (!h.contains(g.identity)) return false;
    for (int a : elems) {
        if (!h.contains(g.inv[size_t(a)])) return false;
        for (int b : elems)
            if (!h.contains(g.mul(a, b))) return false;
    }
    return true;
}

GroupSubset inverse_set(const Group& g, const GroupSubset& s) {
    GroupSubset out(g.n);
    for (int x : s.elements()) out.insert(g.inv[size_t(x)]);
    return out;
}

} // namespace exg
