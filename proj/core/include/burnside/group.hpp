#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "burnside/perm.hpp"

namespace burnside {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

inline constexpr int kDefaultOrderCap = 20000;

/// A finite permutation group with its complete element list, enumerated at
/// construction and sorted lexicographically on image tables.  All other
/// machinery refers to elements by their index into elements(); index 0 is
/// always the identity.  Immutable after construction.
class PermGroup {
public:
    /// Closes `generators` under composition.  Throws order_cap_exceeded if
    /// more than `order_cap` elements appear.
    static GroupPtr generate(int degree, std::vector<Permutation> generators,
                             int order_cap = kDefaultOrderCap);

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    /// Index of p in elements(), or -1 if p is not an element.
    int index_of(const Permutation& p) const;

    /// Index of elements()[a] * elements()[b] (right factor acts first).
    int mul(int a, int b) const {
        if (!mult_table_.empty()) return mult_table_[static_cast<std::size_t>(a) * elements_.size() + b];
        return mul_slow(a, b);
    }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    /// g x g^-1.
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    long long element_order(int a) const { return element_order_[static_cast<std::size_t>(a)]; }
    bool abelian() const { return abelian_; }

private:
    PermGroup() = default;
    int mul_slow(int a, int b) const;

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<int> generator_indices_;
    std::vector<Permutation> elements_;
    std::vector<int> inverse_;
    std::vector<long long> element_order_;
    std::vector<std::uint16_t> mult_table_; // order x order, only when order <= kMultTableMaxOrder
    bool abelian_ = false;

    struct IndexMap;
    std::shared_ptr<IndexMap> index_; // perm -> element index

    static constexpr int kMultTableMaxOrder = 6000;
};

/// A subgroup of a PermGroup, stored as the sorted list of its element
/// indices.  The public constructor validates the subgroup axioms; internal
/// callers that already guarantee closure use `unchecked`.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<int> element_indices);
    static Subgroup unchecked(GroupPtr parent, std::vector<int> sorted_element_indices);

    static Subgroup trivial(GroupPtr parent);
    static Subgroup whole(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    int order() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int element_index) const;
    bool contains_all(const std::vector<int>& element_indices) const;
    bool is_whole_group() const { return order() == parent_->order(); }

    /// Greedy generating set; typically log2(order) elements or fewer.
    std::vector<int> small_generating_set() const;

    /// Sorted multiset of element orders; conjugation invariant.
    std::vector<long long> order_profile() const;

    bool abelian() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.indices_ == b.indices_;
    }

private:
    struct unchecked_tag {};
    Subgroup(GroupPtr parent, std::vector<int> indices, unchecked_tag)
        : parent_(std::move(parent)), indices_(std::move(indices)) {}

    GroupPtr parent_;
    std::vector<int> indices_;
};

/// Smallest subgroup of `g` containing the seed elements.
Subgroup subgroup_closure(const GroupPtr& g, std::span<const int> seed);

/// Closure of `seed` as a raw sorted index list (no Subgroup wrapper).
std::vector<int> closure_indices(const PermGroup& g, std::span<const int> seed);

/// N_G(H) = {g in G : gHg^-1 = H}, computed by scanning all of G.
Subgroup normalizer(const Subgroup& h);

/// Derived subgroup H' = <[a,b] : a, b in H>.
Subgroup derived_subgroup(const Subgroup& h);

/// Conjugate subgroup gHg^-1.
Subgroup conjugate_subgroup(const Subgroup& h, int g);

/// Some g with gHg^-1 = K, if one exists.  Prefilters on order and on the
/// multiset of element orders before scanning G.
std::optional<int> conjugating_element(const Subgroup& h, const Subgroup& k);
bool is_conjugate(const Subgroup& h, const Subgroup& k);

/// One element of N per conjugacy class of Q = N/H (H must be normal in N;
/// throws not_normal otherwise).  Cosets are canonicalized by their minimal
/// element; the returned representatives are sorted by that canonical
/// element.  If `rng` is given, each representative is replaced by a random
/// member of a random coset in its class (the class itself is unchanged),
/// which downstream results must be invariant under.
std::vector<int> quotient_class_reps(const Subgroup& n, const Subgroup& h,
                                     std::mt19937_64* rng = nullptr);

} // namespace burnside
