#pragma once

#include <optional>
#include <string>

#include "burnside/lattice.hpp"
#include "burnside/marks.hpp"
#include "burnside/units.hpp"

namespace burnside {

/// Subgroup-lattice document: degree, generators and one representative per
/// class, everything in cycle notation.  The export is canonical; importing
/// re-validates every subgroup axiom, re-derives the conjugation orbits and
/// rejects conjugate or non-closed representatives.
std::string lattice_to_json(const SubgroupClassList& classes);
SubgroupClassList lattice_from_json(const std::string& json_text,
                                    int order_cap = kDefaultOrderCap);

/// Marks table with the class ordering alongside.
std::string marks_to_json(const SubgroupClassList& classes, const MarksTable& marks);

/// Unit-group result: group name, r, rank, basis rows aligned to the exported
/// class ordering, verification flag and (optionally) the conjecture report.
std::string unit_result_to_json(const std::string& group_name, const SubgroupClassList& classes,
                                const UnitGroupResult& result,
                                const std::optional<ConjectureReport>& conjecture);

} // namespace burnside
