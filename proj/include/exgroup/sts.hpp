#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "exgroup/arith.hpp"
#include "exgroup/graph.hpp"
#include "exgroup/group.hpp"
#include "exgroup/pds.hpp"
#include "exgroup/schur.hpp"

namespace exg {

struct SteinerTripleSystem {
    int points = 0;
    std::vector<std::array<int, 3>> blocks; // each ascending; list sorted lexicographically
};

/// True iff every point pair is covered by exactly one block.
bool is_steiner_triple_system(const SteinerTripleSystem& s);

/// The orbit construction over the index-6 Frobenius subgroup of AGL_1(p):
/// blocks are the images of {0, 1, x} for the smallest x making the orbit a
/// Steiner triple system on which the group acts regularly.
struct ClaphamSystem {
    FrobeniusGroup frob;
    SteinerTripleSystem sts;
    int x = -1;
    int base_block = -1;

    /// Index of a block given by its (unsorted) points; -1 if absent.
    int block_index(int a, int b, int c) const;

    /// Image of a block under g in the action used for the regular labeling
    /// (the right action induced by applying g^-1 to the points).
    int block_image(int g, int block) const;
};

/// Requires p prime with p = 7 (mod 12); errc::bad_prime otherwise.
/// errc::no_such_x would signal a defect (existence is guaranteed).
ClaphamSystem clapham_sts(int p);

/// Graph on blocks; adjacent iff the blocks share at least one point.
Graph block_graph(const SteinerTripleSystem& s);

/// Bijection g -> image of the base block under g, for a regular action.
struct RegularBlockLabeling {
    int base_block = -1;
    std::vector<int> map; // indexed by group element
};

/// Verifies |G| = n_blocks, that only the identity fixes the base block, and
/// that g -> base^g is a bijection. Throws errc::not_regular otherwise.
RegularBlockLabeling regular_labeling(const Group& g,
                                      const std::function<int(int, int)>& block_image,
                                      int n_blocks, int base_block);

/// X = {g != 1 : base^g meets base}. Asserts internally that X = X^-1 and
/// that the labeling is an edge-exact isomorphism from cay(G, X) to the block
/// graph (pass the graph to avoid recomputing it).
GroupSubset connection_set(const RegularBlockLabeling& labeling, const SteinerTripleSystem& s,
                           const Group& g, const Graph* precomputed_block_graph = nullptr);

/// Re-checkable record of one full verification run.
struct WitnessCertificate {
    int p = 0;
    int group_order = 0;
    std::string group_name;
    int sts_points = 0;
    int sts_blocks = 0;
    int x = -1;
    SrgParameters srg;
    PdsCertificate pds;
    int schur_rank = 0;
    std::vector<int> schur_class_sizes;
    bool primitive = false;
    GoodPartition partition;
    ObstructionReport arith;
    std::string non_bs;  // "CERTIFIED"
    std::string b_side;  // arithmetic summary

    bool fully_established() const;
};

/// Full pipeline: clapham_sts -> block_graph -> srg_parameters ->
/// regular_labeling -> connection_set -> check_regular_pds -> rank-3
/// schurian closure -> primitivity -> arithmetic obstructions.
/// Any stage failure is reported as StageFailure with the stage name.
WitnessCertificate exclusive_witness(int p, int threads = 1);

} // namespace exg
