#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exgroup/arith.hpp"
#include "exgroup/graph.hpp"
#include "exgroup/group.hpp"
#include "exgroup/pds.hpp"
#include "exgroup/schur.hpp"
#include "exgroup/sts.hpp"

namespace exg {

// Text formats. All readers throw errc::io_error with a diagnostic on
// malformed input; all writers emit byte-deterministic output.

/// "group <n>" then n rows of n indices; the identity is located, not assumed.
Group read_group(std::istream& in, ValidateOptions opts = {});
Group read_group_file(const std::string& path, ValidateOptions opts = {});
void write_group(std::ostream& out, const Group& g);

/// One line of whitespace-separated element indices (empty file = empty set).
GroupSubset read_subset(std::istream& in, int parent_order);
GroupSubset read_subset_file(const std::string& path, int parent_order);
void write_subset(std::ostream& out, const GroupSubset& s);

/// One subset per nonempty line; '#' starts a comment.
std::vector<GroupSubset> read_seeds(std::istream& in, int parent_order);
std::vector<GroupSubset> read_seeds_file(const std::string& path, int parent_order);

/// One class per line; '#' starts a comment.
GoodPartition read_partition(std::istream& in, const Group& g);
GoodPartition read_partition_file(const std::string& path, const Group& g);
void write_partition(std::ostream& out, const GoodPartition& p);

/// "graph <v> <e>" then e lines "u v" (0-based).
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& graph);

/// "perm <degree> <#gens> <base_point>" then one generator per line.
PermutationSet read_permutation_set(std::istream& in);
PermutationSet read_permutation_set_file(const std::string& path);

/// "sts <p> <#blocks>" then one block per line.
void write_sts(std::ostream& out, const SteinerTripleSystem& s);

// Report renderers (fixed key order, golden-file friendly).
void render_schur_report(std::ostream& out, const SchurRing& ring);
void render_pds_certificate(std::ostream& out, const PdsCertificate& cert);
void render_srg(std::ostream& out, const SrgCheck& check);
void render_obstruction_report(std::ostream& out, const ObstructionReport& report);
void render_certificate(std::ostream& out, const WitnessCertificate& cert);

} // namespace exg
