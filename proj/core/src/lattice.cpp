#include "burnside/lattice.hpp"

#include <algorithm>
#include <deque>

#include "burnside/errors.hpp"

namespace burnside {

std::size_t SubgroupClassList::VectorHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

int SubgroupClassList::index_of(const std::vector<int>& sorted_element_indices) const {
    auto it = class_of_.find(sorted_element_indices);
    if (it == class_of_.end())
        throw lattice_error("subgroup of order " + std::to_string(sorted_element_indices.size()) +
                            " is missing from the lattice");
    return it->second;
}

namespace {

using Key = std::vector<int>;

struct KeyHash {
    std::size_t operator()(const Key& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

Key conjugate_key(const PermGroup& g, const Key& k, int elem) {
    Key out;
    out.reserve(k.size());
    for (int x : k) out.push_back(g.conj(elem, x));
    std::sort(out.begin(), out.end());
    return out;
}

// The conjugation orbit of one subgroup, starting from any member.
std::vector<Key> subgroup_orbit(const PermGroup& g, Key start) {
    std::unordered_map<Key, char, KeyHash> seen;
    std::deque<Key> queue;
    seen.emplace(start, 1);
    queue.push_back(std::move(start));
    std::vector<Key> orbit;
    while (!queue.empty()) {
        Key cur = std::move(queue.front());
        queue.pop_front();
        for (int s : g.generator_indices()) {
            Key img = conjugate_key(g, cur, s);
            if (seen.emplace(img, 1).second) queue.push_back(std::move(img));
        }
        orbit.push_back(std::move(cur));
    }
    return orbit;
}

// All distinct cyclic subgroups, each with its least generator.
void cyclic_subgroups(const PermGroup& g, std::vector<Key>& subgroups, std::vector<int>& gens) {
    std::unordered_map<Key, char, KeyHash> seen;
    for (int e = 0; e < g.order(); ++e) {
        Key powers;
        int x = e;
        while (x != 0) {
            powers.push_back(x);
            x = g.mul(x, e);
        }
        powers.push_back(0);
        std::sort(powers.begin(), powers.end());
        if (seen.emplace(powers, 1).second) {
            subgroups.push_back(std::move(powers));
            gens.push_back(e);
        }
    }
}

struct Discovered {
    std::unordered_map<Key, int, KeyHash> class_of; // every subgroup
    std::vector<Key> class_rep;                      // least member per class
    std::vector<long long> class_size;

    // Returns true if the key belongs to a class not seen before; in that
    // case the whole conjugation orbit is recorded.
    bool add_class(const PermGroup& g, const Key& key) {
        if (class_of.count(key)) return false;
        int id = static_cast<int>(class_rep.size());
        auto orbit = subgroup_orbit(g, key);
        Key least = orbit.front();
        for (const auto& k : orbit)
            if (k < least) least = k;
        for (auto& k : orbit) class_of.emplace(std::move(k), id);
        class_size.push_back(static_cast<long long>(orbit.size()));
        class_rep.push_back(std::move(least));
        return true;
    }
};

Discovered enumerate_lattice(const GroupPtr& gp) {
    const PermGroup& g = *gp;
    Discovered d;

    std::vector<Key> cyclics;
    std::vector<int> cyclic_gens;
    cyclic_subgroups(g, cyclics, cyclic_gens);
    for (const auto& z : cyclics) d.add_class(g, z);

    // Extend class representatives by single cyclic generators until no new
    // class appears.  Conjugation closure in add_class keeps the subgroup set
    // conjugation-closed, which is what makes representative-only extension
    // complete.
    for (std::size_t next = 0; next < d.class_rep.size(); ++next) {
        const Key rep = d.class_rep[next]; // copy: the vector may reallocate
        std::vector<char> in_rep(static_cast<std::size_t>(g.order()), 0);
        for (int x : rep) in_rep[static_cast<std::size_t>(x)] = 1;
        for (std::size_t zi = 0; zi < cyclic_gens.size(); ++zi) {
            int z = cyclic_gens[zi];
            if (in_rep[static_cast<std::size_t>(z)]) continue;
            Key seed = rep;
            seed.push_back(z);
            Key closed = closure_indices(g, seed);
            d.add_class(g, closed);
        }
    }
    return d;
}

} // namespace

SubgroupClassList SubgroupClassList::from_representatives(GroupPtr parent,
                                                          std::vector<Subgroup> reps) {
    const PermGroup& g = *parent;
    SubgroupClassList out;
    out.parent_ = parent;

    struct Raw {
        Key rep;
        long long size;
        std::vector<Key> members;
    };
    std::vector<Raw> raw;
    std::unordered_map<Key, int, VectorHash> seen;
    for (const auto& s : reps) {
        if (s.parent() != parent) throw lattice_error("representative from a different group");
        auto orbit = subgroup_orbit(g, s.indices());
        Key least = orbit.front();
        for (const auto& k : orbit)
            if (k < least) least = k;
        for (const auto& k : orbit) {
            auto [it, fresh] = seen.emplace(k, static_cast<int>(raw.size()));
            if (!fresh) throw lattice_error("two representatives are conjugate or duplicated");
        }
        raw.push_back(Raw{std::move(least), static_cast<long long>(orbit.size()), std::move(orbit)});
    }

    std::vector<int> perm(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto& ka = raw[static_cast<std::size_t>(a)].rep;
        const auto& kb = raw[static_cast<std::size_t>(b)].rep;
        if (ka.size() != kb.size()) return ka.size() < kb.size();
        return ka < kb;
    });

    for (int id : perm) {
        auto& r = raw[static_cast<std::size_t>(id)];
        Subgroup rep_sub = Subgroup::unchecked(parent, r.rep);
        Subgroup norm = normalizer(rep_sub);
        if (static_cast<long long>(g.order()) != r.size * norm.order())
            throw lattice_error("class size violates the orbit-stabilizer relation");
        int final_id = static_cast<int>(out.classes_.size());
        for (auto& k : r.members) {
            out.all_.emplace_back(k, final_id);
            out.class_of_.emplace(std::move(k), final_id);
        }
        out.classes_.push_back(SubgroupClass{std::move(rep_sub), r.size, std::move(norm)});
    }

    if (out.classes_.empty() || out.classes_.front().representative.order() != 1 ||
        !out.classes_.back().representative.is_whole_group())
        throw lattice_error("class list must run from the trivial subgroup to the whole group");

    std::sort(out.all_.begin(), out.all_.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    auto d = enumerate_lattice(g);
    std::vector<Key> keys;
    keys.reserve(d.class_of.size());
    for (const auto& [k, id] : d.class_of) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subgroup> out;
    out.reserve(keys.size());
    for (auto& k : keys) out.push_back(Subgroup::unchecked(g, std::move(k)));
    return out;
}

SubgroupClassList class_list(const GroupPtr& g) {
    auto d = enumerate_lattice(g);
    std::vector<Subgroup> reps;
    reps.reserve(d.class_rep.size());
    for (auto& k : d.class_rep) reps.push_back(Subgroup::unchecked(g, std::move(k)));
    return SubgroupClassList::from_representatives(g, std::move(reps));
}

} // namespace burnside
