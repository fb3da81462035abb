#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// One conjugacy class of subgroups.
struct SubgroupClass {
    Subgroup representative; // lexicographically least member of the class
    long long size = 0;      // number of conjugates
    Subgroup normalizer;     // N_G(representative)
};

/// The ordered list H_1, ..., H_r of conjugacy-class representatives that
/// indexes everything downstream: H_1 is the trivial subgroup, H_r = G, and
/// classes are sorted by (subgroup order, element-index tuple).  Also keeps
/// every individual subgroup so arbitrary subgroups can be mapped to their
/// class index.
class SubgroupClassList {
public:
    const GroupPtr& parent() const { return parent_; }
    int size() const { return static_cast<int>(classes_.size()); } // r
    const SubgroupClass& cls(int i) const { return classes_[static_cast<std::size_t>(i)]; }
    const Subgroup& rep(int i) const { return classes_[static_cast<std::size_t>(i)].representative; }

    /// Class index of the subgroup with the given sorted element indices.
    /// Throws lattice_error if the subgroup is unknown (lattice inconsistency).
    int index_of(const std::vector<int>& sorted_element_indices) const;
    int index_of(const Subgroup& s) const { return index_of(s.indices()); }

    long long total_subgroups() const { return static_cast<long long>(all_.size()); }

    /// Every subgroup of G with its class index, sorted by (order, indices).
    const std::vector<std::pair<std::vector<int>, int>>& all_subgroups_with_class() const {
        return all_;
    }

    /// Builds the canonical class list from one representative per class.
    /// Closes each representative under conjugation, rejects conjugate
    /// representatives, recomputes normalizers and verifies orbit sizes
    /// against the orbit-stabilizer relation.
    static SubgroupClassList from_representatives(GroupPtr parent, std::vector<Subgroup> reps);

private:
    SubgroupClassList() = default;

    GroupPtr parent_;
    std::vector<SubgroupClass> classes_;
    std::vector<std::pair<std::vector<int>, int>> all_; // sorted by (order, indices)

    struct VectorHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };
    std::unordered_map<std::vector<int>, int, VectorHash> class_of_;
};

/// Every subgroup of G, sorted by (order, element-index tuple).  Enumerated by
/// cyclic extension: seed with the cyclic subgroups, then repeatedly close
/// class representatives together with single cyclic generators, closing each
/// discovery under conjugation.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

SubgroupClassList class_list(const GroupPtr& g);

} // namespace burnside
