#pragma once

#include "exgroup/group.hpp"

namespace exg {

// Standard small-group constructors, used by tests and the bundled corpus.

Group cyclic_group(int n);

/// Symmetries of a regular m-gon; order 2m.
Group dihedral_group(int m);

/// (C_p)^k with componentwise addition; order p^k.
Group elementary_abelian_group(int p, int k);

Group quaternion_group(); // Q_8

Group alternating_group_4(); // A_4, order 12

Group direct_product(const Group& a, const Group& b);

/// C_m : C_k with the complement acting by x -> a*x; requires a^k = 1 (mod m).
Group semidirect_cyclic(int m, int k, int a);

} // namespace exg
