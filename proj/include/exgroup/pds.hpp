#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exgroup/graph.hpp"
#include "exgroup/group.hpp"

namespace exg {

/// Cayley graph cay(G, X): vertices are group elements, g ~ h iff h g^-1 in X.
/// Throws errc::bad_connection_set unless 1 not in X and X = X^-1.
Graph cayley_graph(const Group& g, const GroupSubset& x);

/// Verified regular partial difference set: cay(G, X) is a connected and
/// coconnected strongly regular graph and X generates G.
struct PdsCertificate {
    int v = 0;
    int k = 0;
    long long lambda = 0, mu = 0;
    bool inverse_closed = false;
    bool generates = false;
    GroupSubset set;
};

enum class PdsStatus {
    pds,
    contains_identity,
    not_inverse_closed,
    not_pds,            // difference counts are non-constant
    does_not_generate,
    degenerate,         // complete, disconnected or complete-multipartite cases
};

const char* pds_status_name(PdsStatus s);

struct PdsCheck {
    PdsStatus status = PdsStatus::not_pds;
    std::optional<PdsCertificate> certificate; // set when status == pds
    int witness_g1 = -1, witness_g2 = -1;      // offending elements for not_pds
    std::string detail;

    bool ok() const { return status == PdsStatus::pds; }
};

/// Counts d(g) = #{(x,y) in X*X : x y^-1 = g} for every g != 1 and requires
/// the count to be one constant on X and another on the complement, X to
/// generate G, and the degenerate cases to be excluded; the result is
/// cross-validated against srg_parameters(cayley_graph(G, X)).
/// X must be nonempty (errc::empty_set otherwise).
PdsCheck check_regular_pds(const Group& g, const GroupSubset& x, int threads = 1);

struct PdsSearchOptions {
    std::optional<int> size_filter;
    std::optional<int> limit;  // truncates the canonically sorted result list
    int max_free_bits = 30;    // involutions + inverse pairs
    int threads = 1;
};

/// Enumerates inverse-closed subsets avoiding the identity (Gray-code order
/// over involution/inverse-pair indicators with incrementally maintained
/// difference counts) and returns every certificate accepted by
/// check_regular_pds, ordered by (size, elements).
/// Throws errc::search_space_too_large when the free-bit count exceeds
/// max_free_bits.
std::vector<PdsCertificate> search_regular_pds(const Group& g, const PdsSearchOptions& opts = {});

} // namespace exg
