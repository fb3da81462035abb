#pragma once

#include <vector>

#include "burnside/group.hpp"

namespace burnside {

GroupPtr symmetric(int n, int order_cap = kDefaultOrderCap);
GroupPtr alternating(int n, int order_cap = kDefaultOrderCap);
GroupPtr cyclic(int n, int order_cap = kDefaultOrderCap);

/// Dihedral group of the given (even) order, acting on the vertices of a
/// regular polygon for order >= 6; orders 2 and 4 are the degenerate cases
/// C2 and C2 x C2.
GroupPtr dihedral(int order, int order_cap = kDefaultOrderCap);

/// (C2)^k; k = 0 gives the trivial group.
GroupPtr elementary_abelian(int k, int order_cap = kDefaultOrderCap);

GroupPtr direct_product(const PermGroup& a, const PermGroup& b,
                        int order_cap = kDefaultOrderCap);

/// (C_{m_1} x ... x C_{m_t}) x| <inv> for odd m_i >= 3: the abelian part acts
/// regularly on its own elements and the extra involution inverts them.
GroupPtr semidirect_inversion(const std::vector<int>& odd_orders,
                              int order_cap = kDefaultOrderCap);

} // namespace burnside
