#pragma once

#include <optional>
#include <vector>

#include "exgroup/group.hpp"

namespace exg {

/// Partition of a group with {identity} as a class and inverse-closed classes.
/// Classes are kept in canonical order: by (size, smallest element), each
/// class ascending.
struct GoodPartition {
    int n = 0;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    int identity_class = -1;

    int rank() const { return int(classes.size()); }
    std::vector<int> class_sizes() const;
};

/// Validates and canonicalizes. Throws errc::bad_partition on any invariant
/// violation (missing identity singleton, classes not inverse-closed, not a
/// disjoint cover).
GoodPartition make_good_partition(const Group& g, std::vector<std::vector<int>> classes);

/// {identity} and everything else. Throws errc::too_small when |G| = 1.
GoodPartition trivial_partition(const Group& g);

/// All singletons (the partition of the full group ring).
GoodPartition singleton_partition(const Group& g);

/// A good partition whose class sums span a subring of the integral group
/// ring, together with the structure constants c(i,j,k) of the class-sum
/// products.
struct SchurRing {
    GoodPartition partition;
    std::vector<long long> tensor; // rank^3, (i,j,k) lexicographic

    int rank() const { return partition.rank(); }
    long long c(int i, int j, int k) const {
        const size_t r = size_t(rank());
        return tensor[(size_t(i) * r + size_t(j)) * r + size_t(k)];
    }
};

/// First place where the ring condition fails: in the product of classes i
/// and j, elements g1 and g2 of class cls get coefficients c1 != c2.
struct SchurRingWitness {
    int i = -1, j = -1, cls = -1;
    int g1 = -1, g2 = -1;
    long long c1 = 0, c2 = 0;
};

struct SchurCheck {
    bool ok = false;
    SchurRing ring;           // set when ok
    SchurRingWitness witness; // set when !ok
};

/// Decides whether the partition spans a Schur ring; on success returns the
/// ring with its structure-constant tensor, otherwise the first witness in
/// (i, j, class, element) lexicographic order.
SchurCheck is_schur_ring(const Group& g, const GoodPartition& p, int threads = 1);

/// Coarsest Schur-ring partition that separates {identity}, cuts along every
/// seed boundary, and is inverse-closed. Refinement: start from the common
/// refinement of the seeds, their complements, their inverse images and
/// {identity}; repeatedly split classes by convolution coefficients against
/// all ordered class pairs (plus the class of the inverse) until stable.
SchurRing schurian_closure(const Group& g, const std::vector<GroupSubset>& seeds,
                           int threads = 1);

struct Primitivity {
    bool primitive = false;
    std::optional<GroupSubset> witness; // proper nontrivial union-of-classes subgroup
};

/// A Schur ring is primitive iff every non-identity basic set generates G.
Primitivity is_primitive(const SchurRing& ring, const Group& g);

/// Generators of a permutation group on 0..degree-1 with a distinguished
/// base point standing for the identity of the labeled group.
struct PermutationSet {
    int degree = 0;
    std::vector<std::vector<int>> generators;
    int base_point = 0;
};

/// Partition of G into the orbits of the base-point stabilizer of the group
/// generated by perms, computed via orbits on ordered pairs. labeling maps
/// points to group elements and must send base_point to the identity. The
/// result is validated with is_schur_ring; errc::not_a_schur_ring signals
/// that G is not regular inside the generated group.
SchurRing orbital_schur_ring(const PermutationSet& perms, const std::vector<int>& labeling,
                             const Group& g);

/// Every Schur ring over G, by filtered set-partition enumeration.
/// Guarded: throws errc::too_large when |G| > 12.
std::vector<SchurRing> enumerate_schur_rings(const Group& g);

/// True iff the set is a union of classes of the partition.
bool is_union_of_classes(const GoodPartition& p, const GroupSubset& s);

/// True iff every class of `coarse` is a union of classes of `fine`.
bool refines(const GoodPartition& fine, const GoodPartition& coarse);

} // namespace exg
