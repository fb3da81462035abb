#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "burnside/gf2.hpp"
#include "burnside/marks.hpp"

namespace burnside {

/// A basis coset of the largest elementary abelian 2-quotient E = N/R, where
/// N = N_G(H) and R = <H, N', squares of N>.  Cosets are named by their
/// minimal element.
struct CosetBasisElement {
    int canonical;      // minimal element index of the coset
    int representative; // chosen member (canonical unless randomized)
};

struct TwoQuotientData {
    Subgroup subgroup;   // H
    Subgroup normalizer; // N = N_G(H)
    Subgroup kernel;     // R, with N/R elementary abelian of order 2^m
    std::vector<CosetBasisElement> basis;
    std::unordered_map<int, std::uint32_t> coset_coords; // canonical coset -> GF(2) coordinates

    int m() const { return static_cast<int>(basis.size()); }
};

/// Computes N, R and a GF(2) basis of E = N/R by a greedy scan over the
/// canonicalized R-cosets of N.  With `rng`, the scan order and the stored
/// coset representatives are randomized; the unit group computed downstream
/// must not depend on these choices.
TwoQuotientData two_quotient(const Subgroup& h, std::mt19937_64* rng = nullptr);

/// Coordinates alpha of the coset Rn in the chosen basis:
/// Rn = e_1^{a_1} ... e_m^{a_m}.  Throws if n is not in N.
std::uint32_t coset_decompose(const TwoQuotientData& data, int n);

/// The homogeneous GF(2) constraints contributed by one subgroup class.
/// Variables are (l_1..l_m, v_1..v_r); each row's v-part touches exactly the
/// coordinates {p, q} of the classes of H and of H<q_j> (cancelling when
/// p = q).
struct SubgroupEquations {
    int class_index = 0;
    int local_var_count = 0;      // m
    std::vector<Gf2Vector> rows;  // width m + r
};

SubgroupEquations equations_for(const SubgroupClassList& classes, int class_index,
                                std::optional<std::uint64_t> seed = std::nullopt);

/// Basis of the unit group of the Burnside ring as sign vectors on the
/// subgroup classes.  The basis is the canonical (RREF) basis of the
/// projection of the global solution space onto the v-coordinates, so it is
/// reproducible and independent of all representative choices.
struct UnitGroupResult {
    int rank = 0;
    std::vector<SignVector> basis;
    bool all_verified = false;
};

/// Assembles the union of the per-class equation systems over the variables
/// (all l-blocks, then v_1..v_r), computes its nullspace, projects onto the
/// v-coordinates and converts to sign vectors via u_i = (-1)^{v_i}.  Every
/// basis vector is verified against the marks-table membership test and the
/// all-minus vector is checked to lie in the span; failure of either throws
/// verification_error.
UnitGroupResult unit_group(const SubgroupClassList& classes, const MarksTable& marks,
                           std::optional<std::uint64_t> seed = std::nullopt, int jobs = 1);

/// Convenience: class list, marks table and unit group in one call.
UnitGroupResult unit_group(const GroupPtr& g);

/// Exhaustive oracle: all of {+-1}^r tested entry by entry against the marks
/// table.  Throws oracle_cap_exceeded when r > cap_r.
std::vector<SignVector> brute_force_units(const MarksTable& marks, int cap_r = 20);

/// All 2^k elements of the group generated by the given units, sorted.
std::vector<SignVector> span_of_units(const std::vector<SignVector>& units);

/// Whether two unit families generate the same subgroup of {+-1}^r.
bool unit_spans_equal(const std::vector<SignVector>& a, const std::vector<SignVector>& b);

/// For abelian G: the basis {-lambda_1, ..., -lambda_{2^n - 1}, lambda_G},
/// where lambda_i is +1 exactly on subgroups of the i-th index-2 subgroup and
/// lambda_G is their product (the all-minus vector when n = 0).  Each vector
/// is verified to lie in the Burnside ring.  Throws not_abelian otherwise.
std::vector<SignVector> abelian_basis_units(const SubgroupClassList& classes,
                                            const MarksTable& marks);

/// For G = A x| <inv> with A of odd order: the family {u_N : N <= A} plus the
/// all-minus vector, where u_N is -1 exactly on the class of <N, inv>.
/// Throws wrong_construction if G is not of this shape.
std::vector<SignVector> inversion_units(const SubgroupClassList& classes,
                                        const MarksTable& marks);

/// Dimension of the ring spanned by pairs (H, K) with K <= H of index at most
/// 2: the number of N_G(H)-orbits of such K, summed over the classes of H.
long long omega2_dim(const SubgroupClassList& classes);

/// Gaussian binomial [n choose k] at q = 2, via the q-factorial formula.
long long gaussian_binomial(int n, int k);

struct ConjectureReport {
    long long lhs = 0; // rank - 1
    long long rhs = 0; // omega2_dim - r
    bool holds = false;
};

ConjectureReport conjecture_check(const SubgroupClassList& classes, const UnitGroupResult& units);

} // namespace burnside
