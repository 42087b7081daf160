#include "exgroup/schur.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

#include "exgroup/parallel.hpp"

namespace exg {

std::vector<int> GoodPartition::class_sizes() const {
    std::vector<int> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(int(c.size()));
    return out;
}

GoodPartition make_good_partition(const Group& g, std::vector<std::vector<int>> classes) {
    const int n = g.n;
    GoodPartition p;
    p.n = n;
    p.class_of.assign(size_t(n), -1);

    for (auto& cls : classes) {
        require(!cls.empty(), errc::bad_partition, "empty class");
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    for (size_t k = 0; k < classes.size(); ++k)
        for (int x : classes[k]) {
            require(x >= 0 && x < n, errc::bad_partition,
                    "element " + std::to_string(x) + " out of range");
            require(p.class_of[size_t(x)] < 0, errc::bad_partition,
                    "element " + std::to_string(x) + " appears in two classes");
            p.class_of[size_t(x)] = int(k);
        }
    for (int x = 0; x < n; ++x)
        require(p.class_of[size_t(x)] >= 0, errc::bad_partition,
                "element " + std::to_string(x) + " is not covered");

    p.classes = std::move(classes);
    p.identity_class = p.class_of[size_t(g.identity)];
    require(p.classes[size_t(p.identity_class)].size() == 1, errc::bad_partition,
            "the identity must form a singleton class");

    // every class must map onto a class under inversion
    for (const auto& cls : p.classes) {
        const int target = p.class_of[size_t(g.inv[size_t(cls[0])])];
        for (int x : cls)
            require(p.class_of[size_t(g.inv[size_t(x)])] == target, errc::bad_partition,
                    "class containing " + std::to_string(cls[0]) + " is not inverse-closed");
    }
    return p;
}

GoodPartition trivial_partition(const Group& g) {
    require(g.n >= 2, errc::too_small, "the trivial partition needs |G| >= 2");
    std::vector<int> rest;
    rest.reserve(size_t(g.n) - 1);
    for (int x = 0; x < g.n; ++x)
        if (x != g.identity) rest.push_back(x);
    return make_good_partition(g, {{g.identity}, std::move(rest)});
}

GoodPartition singleton_partition(const Group& g) {
    std::vector<std::vector<int>> classes;
    classes.reserve(size_t(g.n));
    for (int x = 0; x < g.n; ++x) classes.push_back({x});
    return make_good_partition(g, std::move(classes));
}

namespace {

void revalidate(const Group& g, const GoodPartition& p) {
    require(p.n == g.n, errc::bad_partition, "partition/group order mismatch");
    require(p.identity_class >= 0 && p.identity_class < p.rank() &&
                p.classes[size_t(p.identity_class)] == std::vector<int>{g.identity},
            errc::bad_partition, "identity class corrupted");
}

} // namespace

SchurCheck is_schur_ring(const Group& g, const GoodPartition& p, int threads) {
    revalidate(g, p);
    const int n = g.n;
    const size_t r = size_t(p.rank());
    threads = resolve_threads(threads);

    SchurCheck out;
    std::vector<long long> tensor(r * r * r, 0);
    std::vector<SchurRingWitness> fails(r * r);

    auto run_pair = [&](size_t pid, std::vector<long long>& cnt) -> bool {
        const int i = int(pid / r), j = int(pid % r);
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int x : p.classes[size_t(i)]) {
            const std::int32_t* row = g.row(x);
            for (int y : p.classes[size_t(j)]) cnt[size_t(row[y])]++;
        }
        for (size_t k = 0; k < r; ++k) {
            const auto& cls = p.classes[k];
            const long long c0 = cnt[size_t(cls[0])];
            for (size_t t = 1; t < cls.size(); ++t)
                if (cnt[size_t(cls[t])] != c0) {
                    fails[pid] = SchurRingWitness{i, j, int(k), cls[0], cls[t], c0,
                                                  cnt[size_t(cls[t])]};
                    return false;
                }
            tensor[(size_t(i) * r + size_t(j)) * r + k] = c0;
        }
        return true;
    };

    if (threads == 1) {
        std::vector<long long> cnt(static_cast<size_t>(n), 0);
        for (size_t pid = 0; pid < r * r; ++pid)
            if (!run_pair(pid, cnt)) {
                out.ok = false;
                out.witness = fails[pid];
                return out;
            }
    } else {
        parallel_chunks(std::int64_t(r * r), threads, [&](std::int64_t lo, std::int64_t hi) {
            std::vector<long long> cnt(static_cast<size_t>(n), 0);
            for (std::int64_t pid = lo; pid < hi; ++pid) run_pair(size_t(pid), cnt);
        });
        for (size_t pid = 0; pid < r * r; ++pid)
            if (fails[pid].cls >= 0) {
                out.ok = false;
                out.witness = fails[pid];
                return out;
            }
    }

    // mass identity: sum_k c(i,j,k) |X_k| = |X_i| |X_j|
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            long long mass = 0;
            for (size_t k = 0; k < r; ++k)
                mass += tensor[(i * r + j) * r + k] * (long long)p.classes[k].size();
            require(mass == (long long)p.classes[i].size() * (long long)p.classes[j].size(),
                    errc::internal, "structure-constant mass identity violated");
        }

    out.ok = true;
    out.ring = SchurRing{p, std::move(tensor)};
    return out;
}

namespace {

/// Deterministically renumber elements into classes given per-element keys.
/// Returns the number of classes.
int assign_classes(const std::vector<std::vector<std::int64_t>>& keys, std::vector<int>& cls) {
    const int n = int(keys.size());
    std::vector<int> order(static_cast<size_t>(n), 0);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&keys](int a, int b) {
        if (keys[size_t(a)] != keys[size_t(b)]) return keys[size_t(a)] < keys[size_t(b)];
        return a < b;
    });
    int next = -1;
    for (size_t t = 0; t < order.size(); ++t) {
        if (t == 0 || keys[size_t(order[t])] != keys[size_t(order[t - 1])]) ++next;
        cls[size_t(order[t])] = next;
    }
    return next + 1;
}

} // namespace

SchurRing schurian_closure(const Group& g, const std::vector<GroupSubset>& seeds, int threads) {
    const int n = g.n;
    threads = resolve_threads(threads);

    // initial coloring: identity / seed membership / inverse-image membership
    std::vector<std::vector<std::int64_t>> keys{static_cast<size_t>(n)};
    for (int x = 0; x < n; ++x) {
        auto& key = keys[size_t(x)];
        key.push_back(x == g.identity ? 1 : 0);
        for (const auto& s : seeds) {
            require(s.parent_order() == n, errc::invalid_parameters, "seed/group order mismatch");
            key.push_back(s.contains(x) ? 1 : 0);
            key.push_back(s.contains(g.inv[size_t(x)]) ? 1 : 0);
        }
    }
    std::vector<int> cls(static_cast<size_t>(n), 0);
    int rank = assign_classes(keys, cls);

    for (;;) {
        const size_t r = size_t(rank);
        require(double(n) * double(r) * double(r) < 2.5e8, errc::too_large,
                "closure refinement state too large");
        std::vector<std::vector<int>> classes(r);
        for (int x = 0; x < n; ++x) classes[size_t(cls[size_t(x)])].push_back(x);

        // coefficient of every element in every ordered class-pair product
        std::vector<std::int32_t> coef(size_t(n) * r * r, 0);
        parallel_chunks(std::int64_t(r * r), threads, [&](std::int64_t lo, std::int64_t hi) {
            std::vector<std::int32_t> cnt(static_cast<size_t>(n), 0);
            for (std::int64_t pid = lo; pid < hi; ++pid) {
                std::fill(cnt.begin(), cnt.end(), 0);
                const auto& ci = classes[size_t(pid) / r];
                const auto& cj = classes[size_t(pid) % r];
                for (int x : ci) {
                    const std::int32_t* row = g.row(x);
                    for (int y : cj) cnt[size_t(row[y])]++;
                }
                for (int t = 0; t < n; ++t)
                    coef[size_t(t) * r * r + size_t(pid)] = cnt[size_t(t)];
            }
        });

        for (int x = 0; x < n; ++x) {
            auto& key = keys[size_t(x)];
            key.clear();
            key.push_back(cls[size_t(x)]);
            const std::int32_t* row = &coef[size_t(x) * r * r];
            key.insert(key.end(), row, row + r * r);
            key.push_back(cls[size_t(g.inv[size_t(x)])]);
        }
        const int new_rank = assign_classes(keys, cls);
        if (new_rank == rank) break;
        rank = new_rank;
    }

    std::vector<std::vector<int>> classes{static_cast<size_t>(rank)};
    for (int x = 0; x < n; ++x) classes[size_t(cls[size_t(x)])].push_back(x);
    auto check = is_schur_ring(g, make_good_partition(g, std::move(classes)), threads);
    require(check.ok, errc::internal, "closure refinement did not stabilize to a Schur ring");
    return std::move(check.ring);
}

Primitivity is_primitive(const SchurRing& ring, const Group& g) {
    revalidate(g, ring.partition);
    for (int k = 0; k < ring.rank(); ++k) {
        if (k == ring.partition.identity_class) continue;
        const GroupSubset basic(g.n, ring.partition.classes[size_t(k)]);
        GroupSubset generated = generated_subgroup(g, basic);
        if (generated.size() != g.n) return {false, std::move(generated)};
    }
    return {true, std::nullopt};
}

SchurRing orbital_schur_ring(const PermutationSet& perms, const std::vector<int>& labeling,
                             const Group& g) {
    const int n = perms.degree;
    require(n == g.n, errc::invalid_parameters, "degree must equal |G|");
    require(int(labeling.size()) == n, errc::invalid_parameters, "labeling size mismatch");
    require(perms.base_point >= 0 && perms.base_point < n, errc::invalid_parameters,
            "base point out of range");
    {
        std::vector<char> seen(size_t(n), 0);
        for (int x : labeling) {
            require(x >= 0 && x < n && !seen[size_t(x)], errc::invalid_parameters,
                    "labeling is not a bijection");
            seen[size_t(x)] = 1;
        }
    }
    require(labeling[size_t(perms.base_point)] == g.identity, errc::invalid_parameters,
            "labeling must send the base point to the identity");
    for (const auto& perm : perms.generators) {
        require(int(perm.size()) == n, errc::invalid_parameters, "generator degree mismatch");
        std::vector<char> seen(size_t(n), 0);
        for (int x : perm) {
            require(x >= 0 && x < n && !seen[size_t(x)], errc::invalid_parameters,
                    "generator is not a bijection");
            seen[size_t(x)] = 1;
        }
    }

    // orbits of ordered pairs (base, x) under the generated group (forward
    // closure suffices: every element has finite order)
    const int base = perms.base_point;
    std::vector<char> visited(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> classes;
    std::vector<std::int64_t> queue;
    for (int x0 = 0; x0 < n; ++x0) {
        if (visited[size_t(base) * size_t(n) + size_t(x0)]) continue;
        std::vector<int> members;
        queue.clear();
        auto push = [&](int u, int v) {
            const size_t id = size_t(u) * size_t(n) + size_t(v);
            if (!visited[id]) {
                visited[id] = 1;
                queue.push_back(std::int64_t(u) * n + v);
                if (u == base) members.push_back(labeling[size_t(v)]);
            }
        };
        push(base, x0);
        while (!queue.empty()) {
            const std::int64_t pair = queue.back();
            queue.pop_back();
            const int u = int(pair / n), v = int(pair % n);
            for (const auto& perm : perms.generators) push(perm[size_t(u)], perm[size_t(v)]);
        }
        classes.push_back(std::move(members));
    }

    GoodPartition partition;
    try {
        partition = make_good_partition(g, std::move(classes));
    } catch (const Error& e) {
        fail(errc::not_a_schur_ring,
             std::string("orbit partition is invalid (group not regular?): ") + e.what());
    }
    auto check = is_schur_ring(g, partition);
    if (!check.ok)
        fail(errc::not_a_schur_ring,
             "pair-orbit partition fails the ring condition at classes (" +
                 std::to_string(check.witness.i) + "," + std::to_string(check.witness.j) +
                 "); the labeled group is not regular in the generated group");
    return std::move(check.ring);
}

std::vector<SchurRing> enumerate_schur_rings(const Group& g) {
    const int n = g.n;
    require(n <= 12, errc::too_large, "enumeration is guarded to |G| <= 12");

    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
        if (x != g.identity) rest.push_back(x);
    const int m = int(rest.size());

    std::vector<int> inv_pos(static_cast<size_t>(m), 0); // position of rest[t]^-1 within rest
    for (int t = 0; t < m; ++t) {
        const int xi = g.inv[size_t(rest[size_t(t)])];
        inv_pos[size_t(t)] =
            int(std::lower_bound(rest.begin(), rest.end(), xi) - rest.begin());
    }

    std::vector<SchurRing> out;
    auto consider = [&](const std::vector<int>& assign, int nclasses) {
        // inverse-closure: the class of x^-1 must be a function of the class of x
        std::vector<int> image(size_t(nclasses), -1);
        for (int t = 0; t < m; ++t) {
            const int ct = assign[size_t(t)];
            const int ci = assign[size_t(inv_pos[size_t(t)])];
            if (image[size_t(ct)] < 0)
                image[size_t(ct)] = ci;
            else if (image[size_t(ct)] != ci)
                return;
        }
        std::vector<std::vector<int>> classes(size_t(nclasses) + 1);
        classes[0].push_back(g.identity);
        for (int t = 0; t < m; ++t) classes[size_t(assign[size_t(t)]) + 1].push_back(rest[size_t(t)]);
        auto check = is_schur_ring(g, make_good_partition(g, std::move(classes)));
        if (check.ok) out.push_back(std::move(check.ring));
    };

    if (m == 0) {
        auto check = is_schur_ring(g, make_good_partition(g, {{g.identity}}));
        require(check.ok, errc::internal, "rank-1 partition must be a ring");
        out.push_back(std::move(check.ring));
        return out;
    }

    // restricted-growth enumeration of set partitions of `rest`
    std::vector<int> assign(size_t(m), 0), maxval(size_t(m), 0);
    for (;;) {
        int nclasses = 0;
        for (int t = 0; t < m; ++t) nclasses = std::max(nclasses, assign[size_t(t)] + 1);
        consider(assign, nclasses);
        int t = m - 1;
        while (t > 0 && assign[size_t(t)] == maxval[size_t(t) - 1] + 1) --t;
        if (t == 0) break;
        assign[size_t(t)]++;
        maxval[size_t(t)] = std::max(maxval[size_t(t) - 1], assign[size_t(t)]);
        for (int u = t + 1; u < m; ++u) {
            assign[size_t(u)] = 0;
            maxval[size_t(u)] = maxval[size_t(u) - 1];
        }
    }

    std::sort(out.begin(), out.end(), [](const SchurRing& a, const SchurRing& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        const auto sa = a.partition.class_sizes(), sb = b.partition.class_sizes();
        if (sa != sb) return sa < sb;
        return a.partition.classes < b.partition.classes;
    });
    return out;
}

bool is_union_of_classes(const GoodPartition& p, const GroupSubset& s) {
    std::vector<char> touched(size_t(p.rank()), 0);
    for (int x : s.elements()) touched[size_t(p.class_of[size_t(x)])] = 1;
    for (int k = 0; k < p.rank(); ++k)
        if (touched[size_t(k)])
            for (int x : p.classes[size_t(k)])
                if (!s.contains(x)) return false;
    return true;
}

bool refines(const GoodPartition& fine, const GoodPartition& coarse) {
    if (fine.n != coarse.n) return false;
    for (const auto& cls : fine.classes) {
        const int target = coarse.class_of[size_t(cls[0])];
        for (int x : cls)
            if (coarse.class_of[size_t(x)] != target) return false;
    }
    return true;
}

} // namespace exg
