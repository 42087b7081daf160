#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "exgroup/error.hpp"

namespace exg {

struct Group;

/// Subset of a group's element indices with bit-vector semantics.
class GroupSubset {
public:
    GroupSubset() = default;
    explicit GroupSubset(int parent_order)
        : n_(parent_order), bits_(words_for(parent_order), 0) {}
    GroupSubset(int parent_order, const std::vector<int>& elements);

    int parent_order() const { return n_; }

    bool contains(int g) const { return (bits_[size_t(g) >> 6] >> (g & 63)) & 1u; }
    void insert(int g) { bits_[size_t(g) >> 6] |= std::uint64_t(1) << (g & 63); }
    void erase(int g) { bits_[size_t(g) >> 6] &= ~(std::uint64_t(1) << (g & 63)); }

    int size() const;
    bool empty() const { return size() == 0; }

    /// Elements in ascending order.
    std::vector<int> elements() const;

    bool operator==(const GroupSubset&) const = default;

    const std::vector<std::uint64_t>& words() const { return bits_; }

private:
    static size_t words_for(int n) { return (size_t(n) + 63) / 64; }
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Finite group materialized as a Cayley table over element indices 0..n-1.
/// table[a*n+b] is the index of the product a*b; identity and inverses are
/// located and verified on construction.
struct Group {
    int n = 0;
    std::vector<std::int32_t> table; // row-major n*n
    int identity = 0;
    std::vector<std::int32_t> inv;

    int mul(int a, int b) const { return table[size_t(a) * size_t(n) + size_t(b)]; }
    const std::int32_t* row(int a) const { return table.data() + size_t(a) * size_t(n); }

    GroupSubset subset(const std::vector<int>& elements) const { return GroupSubset(n, elements); }
    GroupSubset full_subset() const;
};

/// Construction-time validation knobs. Associativity is checked exhaustively
/// up to full_assoc_max elements; larger tables get a deterministic spot check
/// of spot_triples random triples.
struct ValidateOptions {
    int full_assoc_max = 512;
    int spot_triples = 10000;
};

/// Validates the table (Latin property, identity, inverses, associativity)
/// and returns the Group. Throws errc::not_a_group with a reason on failure.
Group group_from_cayley_table(int n, std::vector<std::int32_t> table, ValidateOptions opts = {});

/// Convenience overload for row-of-rows tables.
Group group_from_cayley_table(const std::vector<std::vector<int>>& rows, ValidateOptions opts = {});

/// One-dimensional affine maps x -> a*x + b over F_p with a restricted to the
/// index-d subgroup of the multiplicative group (the d-th power residues).
struct AffineGroupSpec {
    int p = 0;
    int d = 0;
    std::vector<std::pair<int, int>> elements; // (a, b), lexicographic
};

/// A Frobenius subgroup of AGL_1(p) together with its natural action on F_p.
struct FrobeniusGroup {
    Group group;
    AffineGroupSpec spec;

    /// Applies element g to a field point: a*x + b mod p.
    int point_image(int g, int x) const {
        auto [a, b] = spec.elements[size_t(g)];
        return int((std::int64_t(a) * x + b) % spec.p);
    }
};

/// Builds the order-p(p-1)/d subgroup {x -> a x + b : a in A, b in F_p} of
/// AGL_1(p), where A is the group of d-th power residues. Throws
/// errc::invalid_parameters unless p is prime and d divides p-1.
FrobeniusGroup frobenius_subgroup_of_agl(int p, int d, ValidateOptions opts = {});

/// Least subset containing S and the identity that is closed under products
/// and inverses.
GroupSubset generated_subgroup(const Group& g, const GroupSubset& s);

/// True iff nonempty H contains the identity and is closed under products and
/// inverses. Throws errc::empty_set on empty input.
bool is_subgroup(const Group& g, const GroupSubset& h);

/// The set {x^-1 : x in S}.
GroupSubset inverse_set(const Group& g, const GroupSubset& s);

} // namespace exg
