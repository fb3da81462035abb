#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnside/lattice.hpp"

namespace burnside {

/// An element of the ghost ring: one integer per subgroup class,
/// values[i] = x(H_i).
struct GhostVector {
    std::vector<long long> values;
};

/// An element of the Burnside ring as multiplicities of the transitive
/// G-sets G/H_i.
struct BurnsideElement {
    std::vector<long long> multiplicities;
};

/// A +-1 vector in the ghost ring.
struct SignVector {
    std::vector<std::int8_t> signs;

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

GhostVector to_ghost(const SignVector& u);

/// The table of marks: entries(i, j) is the number of fixed points of H_j on
/// the coset space G/H_i.  Lower triangular under the canonical class
/// ordering, with diagonal |N_G(H_i)| / |H_i|.  All structural invariants are
/// checked at construction time.
class MarksTable {
public:
    int size() const { return static_cast<int>(rows_.size()); }
    long long entry(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

private:
    explicit MarksTable(std::vector<std::vector<long long>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<long long>> rows_;

    friend MarksTable marks_table(const SubgroupClassList&, int);
};

/// Number of fixed points of `hj` on G/`hi`, counted over a left transversal
/// of `hi` in G.
long long mark(const Subgroup& hi, const Subgroup& hj);

/// Builds the full table and asserts triangularity, the diagonal and first
/// column formulas, and the all-ones last row; a violation throws
/// lattice_error.  Entries are computed independently; `jobs` > 1 spreads the
/// rows over that many threads.
MarksTable marks_table(const SubgroupClassList& classes, int jobs = 1);

/// The mark homomorphism applied to b: values = multiplicities * M.
GhostVector marks_of(const BurnsideElement& b, const MarksTable& m);

struct DecomposeResult {
    bool integral = false;
    BurnsideElement element;     // valid iff integral
    int non_integral_index = -1; // class index where exact division failed
};

/// Solves c * M = x exactly by back-substitution from the last class down,
/// checking divisibility at each step.  A non-integral solution is reported
/// as a value, not an error.  All arithmetic is exact (arbitrary precision
/// internally); no floating point.
DecomposeResult decompose(const GhostVector& x, const MarksTable& m);

/// Whether the +-1 vector u lies in the Burnside ring, i.e. decomposes
/// integrally over the transitive G-sets.
bool is_unit_in_burnside(const SignVector& u, const MarksTable& m);

/// Plain-text export: one lower-triangular row per line, space separated.
std::string marks_to_text(const MarksTable& m);

} // namespace burnside
