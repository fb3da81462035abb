#pragma once

#include <optional>
#include <string>

#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

/// A parsed group description.  The grammar:
///
///   S<n> A<n> C<n>      symmetric / alternating / cyclic
///   D<k>                dihedral of order k (k even)
///   EA<k>               elementary abelian of order 2^k
///   <term>x<term>       direct product
///   inv(C<m>x...)       semidirect product of an odd abelian group with the
///                       inverting involution
///   perm:<path>         generators from a file, one per line, cycle notation
///   lattice:<path>      validated subgroup-lattice import (JSON)
struct GroupSpec {
    enum class Kind { expression, generator_file, lattice_file };
    Kind kind = Kind::expression;
    std::string text; // the original spec string
    std::string path; // for the file kinds
};

/// Syntax check only; throws parse_error with a position on bad input
/// (including even factors inside inv(...)).
GroupSpec parse_group_spec(const std::string& text);

/// A constructed group, with the imported class list when the spec was a
/// lattice file (enumeration is skipped in that case).
struct RealizedGroup {
    GroupPtr group;
    std::optional<SubgroupClassList> lattice;
    std::string name;
};

RealizedGroup realize_group_spec(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

} // namespace burnside
