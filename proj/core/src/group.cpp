#include "burnside/group.hpp"

#include <algorithm>
#include <unordered_map>

#include "burnside/errors.hpp"

namespace burnside {

struct PermGroup::IndexMap {
    std::unordered_map<Permutation, int, PermutationHash> map;
};

GroupPtr PermGroup::generate(int degree, std::vector<Permutation> generators, int order_cap) {
    if (degree < 1) throw error("degree must be at least 1");
    if (generators.empty()) throw error("generator list must be nonempty");
    for (const auto& g : generators)
        if (g.degree() != degree) throw degree_mismatch("generator degree does not match group degree");
    if (order_cap < 1) throw error("order cap must be positive");

    // Breadth-first closure of the generators under composition.
    std::unordered_map<Permutation, int, PermutationHash> seen;
    std::vector<Permutation> work;
    work.push_back(Permutation::identity(degree));
    seen.emplace(work.back(), 0);
    for (std::size_t qi = 0; qi < work.size(); ++qi) {
        Permutation cur = work[qi];
        for (const auto& g : generators) {
            Permutation next = compose(cur, g);
            if (seen.emplace(next, 0).second) {
                if (static_cast<int>(work.size()) >= order_cap)
                    throw order_cap_exceeded(order_cap, "group order exceeds cap of " +
                                                            std::to_string(order_cap));
                work.push_back(std::move(next));
            }
        }
    }

    auto grp = std::shared_ptr<PermGroup>(new PermGroup());
    grp->degree_ = degree;
    grp->generators_ = std::move(generators);
    std::sort(work.begin(), work.end());
    grp->elements_ = std::move(work);

    grp->index_ = std::make_shared<IndexMap>();
    grp->index_->map.reserve(grp->elements_.size() * 2);
    for (int i = 0; i < grp->order(); ++i) grp->index_->map.emplace(grp->elements_[static_cast<std::size_t>(i)], i);

    const int o = grp->order();
    grp->inverse_.resize(static_cast<std::size_t>(o));
    grp->element_order_.resize(static_cast<std::size_t>(o));
    for (int i = 0; i < o; ++i) {
        const auto& p = grp->elements_[static_cast<std::size_t>(i)];
        grp->inverse_[static_cast<std::size_t>(i)] = grp->index_->map.at(p.inverse());
        grp->element_order_[static_cast<std::size_t>(i)] = p.order();
    }

    if (o <= kMultTableMaxOrder) {
        grp->mult_table_.resize(static_cast<std::size_t>(o) * o);
        for (int a = 0; a < o; ++a) {
            const auto& pa = grp->elements_[static_cast<std::size_t>(a)].images();
            for (int b = 0; b < o; ++b) {
                const auto& pb = grp->elements_[static_cast<std::size_t>(b)].images();
                std::vector<Point> im(pa.size());
                for (std::size_t k = 0; k < im.size(); ++k) im[k] = pa[pb[k]];
                grp->mult_table_[static_cast<std::size_t>(a) * o + b] =
                    static_cast<std::uint16_t>(grp->index_->map.at(Permutation(std::move(im))));
            }
        }
    }

    grp->generator_indices_.reserve(grp->generators_.size());
    for (const auto& g : grp->generators_) grp->generator_indices_.push_back(grp->index_->map.at(g));

    grp->abelian_ = true;
    for (std::size_t a = 0; a < grp->generator_indices_.size() && grp->abelian_; ++a)
        for (std::size_t b = a + 1; b < grp->generator_indices_.size(); ++b) {
            int x = grp->generator_indices_[a], y = grp->generator_indices_[b];
            if (grp->mul(x, y) != grp->mul(y, x)) {
                grp->abelian_ = false;
                break;
            }
        }

    return grp;
}

int PermGroup::index_of(const Permutation& p) const {
    auto it = index_->map.find(p);
    return it == index_->map.end() ? -1 : it->second;
}

int PermGroup::mul_slow(int a, int b) const {
    return index_->map.at(compose(elements_[static_cast<std::size_t>(a)],
                                  elements_[static_cast<std::size_t>(b)]));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> element_indices)
    : parent_(std::move(parent)), indices_(std::move(element_indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (indices_.empty() || indices_.front() != 0)
        throw lattice_error("subgroup must contain the identity");
    for (int i : indices_)
        if (i < 0 || i >= parent_->order()) throw lattice_error("subgroup element index out of range");
    std::vector<char> in(static_cast<std::size_t>(parent_->order()), 0);
    for (int i : indices_) in[static_cast<std::size_t>(i)] = 1;
    for (int a : indices_) {
        if (!in[static_cast<std::size_t>(parent_->inv(a))])
            throw lattice_error("subgroup not closed under inverse");
        for (int b : indices_)
            if (!in[static_cast<std::size_t>(parent_->mul(a, b))])
                throw lattice_error("subgroup not closed under product");
    }
    if (parent_->order() % order() != 0)
        throw lattice_error("subgroup order does not divide group order");
}

Subgroup Subgroup::unchecked(GroupPtr parent, std::vector<int> sorted_element_indices) {
    return Subgroup(std::move(parent), std::move(sorted_element_indices), unchecked_tag{});
}

Subgroup Subgroup::trivial(GroupPtr parent) { return unchecked(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<int> all(static_cast<std::size_t>(parent->order()));
    for (int i = 0; i < static_cast<int>(all.size()); ++i) all[static_cast<std::size_t>(i)] = i;
    return unchecked(std::move(parent), std::move(all));
}

bool Subgroup::contains(int element_index) const {
    return std::binary_search(indices_.begin(), indices_.end(), element_index);
}

bool Subgroup::contains_all(const std::vector<int>& element_indices) const {
    return std::includes(indices_.begin(), indices_.end(), element_indices.begin(),
                         element_indices.end());
}

std::vector<int> Subgroup::small_generating_set() const {
    std::vector<int> gens;
    if (order() == 1) return {0};
    std::vector<char> have(static_cast<std::size_t>(parent_->order()), 0);
    have[0] = 1;
    int have_count = 1;
    std::vector<int> current{0};
    for (int e : indices_) {
        if (have[static_cast<std::size_t>(e)]) continue;
        gens.push_back(e);
        current.push_back(e);
        current = closure_indices(*parent_, current);
        std::fill(have.begin(), have.end(), 0);
        for (int x : current) have[static_cast<std::size_t>(x)] = 1;
        have_count = static_cast<int>(current.size());
        if (have_count == order()) break;
    }
    return gens;
}

std::vector<long long> Subgroup::order_profile() const {
    std::vector<long long> prof;
    prof.reserve(indices_.size());
    for (int i : indices_) prof.push_back(parent_->element_order(i));
    std::sort(prof.begin(), prof.end());
    return prof;
}

bool Subgroup::abelian() const {
    auto gens = small_generating_set();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            if (parent_->mul(gens[a], gens[b]) != parent_->mul(gens[b], gens[a])) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

int smallest_prime_factor(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

} // namespace

std::vector<int> closure_indices(const PermGroup& g, std::span<const int> seed) {
    const int o = g.order();
    // Once the set outgrows the largest proper divisor of |G| it must be all
    // of G; this caps the cost of closures that generate the whole group.
    const int max_proper = o / smallest_prime_factor(o);
    std::vector<char> in(static_cast<std::size_t>(o), 0);
    std::vector<int> mem;
    mem.reserve(64);
    auto push = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            mem.push_back(x);
        }
    };
    push(0);
    for (int s : seed) push(s);
    for (std::size_t qi = 0; qi < mem.size(); ++qi) {
        int x = mem[qi];
        const std::size_t limit = mem.size();
        for (std::size_t yj = 0; yj < limit; ++yj) {
            int y = mem[yj];
            push(g.mul(x, y));
            push(g.mul(y, x));
            if (static_cast<int>(mem.size()) > max_proper) {
                std::vector<int> all(static_cast<std::size_t>(o));
                for (int i = 0; i < o; ++i) all[static_cast<std::size_t>(i)] = i;
                return all;
            }
        }
    }
    std::sort(mem.begin(), mem.end());
    return mem;
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const int> seed) {
    return Subgroup::unchecked(g, closure_indices(*g, seed));
}

Subgroup normalizer(const Subgroup& h) {
    const auto& g = *h.parent();
    auto gens = h.small_generating_set();
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int i : h.indices()) in[static_cast<std::size_t>(i)] = 1;
    std::vector<int> result;
    for (int cand = 0; cand < g.order(); ++cand) {
        bool ok = true;
        for (int s : gens)
            if (!in[static_cast<std::size_t>(g.conj(cand, s))]) {
                ok = false;
                break;
            }
        if (ok) result.push_back(cand);
    }
    return Subgroup::unchecked(h.parent(), std::move(result));
}

Subgroup derived_subgroup(const Subgroup& h) {
    const auto& g = *h.parent();
    auto gens = h.small_generating_set();
    // Commutators of a generating set normally generate the derived subgroup,
    // so close their set under products and under conjugation by the
    // generators of H.
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> mem;
    auto push = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            mem.push_back(x);
        }
    };
    push(0);
    for (int a : gens)
        for (int b : gens)
            push(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    for (std::size_t qi = 0; qi < mem.size(); ++qi) {
        int x = mem[qi];
        for (int s : gens) push(g.conj(s, x));
        const std::size_t limit = mem.size();
        for (std::size_t yj = 0; yj < limit; ++yj) {
            push(g.mul(x, mem[yj]));
            push(g.mul(mem[yj], x));
        }
    }
    std::sort(mem.begin(), mem.end());
    return Subgroup::unchecked(h.parent(), std::move(mem));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g_elem) {
    const auto& g = *h.parent();
    std::vector<int> idx;
    idx.reserve(h.indices().size());
    for (int x : h.indices()) idx.push_back(g.conj(g_elem, x));
    std::sort(idx.begin(), idx.end());
    return Subgroup::unchecked(h.parent(), std::move(idx));
}

std::optional<int> conjugating_element(const Subgroup& h, const Subgroup& k) {
    if (h.parent() != k.parent()) throw error("subgroups of different parent groups");
    if (h.order() != k.order()) return std::nullopt;
    if (h.order_profile() != k.order_profile()) return std::nullopt;
    const auto& g = *h.parent();
    auto gens = h.small_generating_set();
    std::vector<char> in_k(static_cast<std::size_t>(g.order()), 0);
    for (int i : k.indices()) in_k[static_cast<std::size_t>(i)] = 1;
    for (int cand = 0; cand < g.order(); ++cand) {
        bool ok = true;
        for (int s : gens)
            if (!in_k[static_cast<std::size_t>(g.conj(cand, s))]) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return std::nullopt;
}

bool is_conjugate(const Subgroup& h, const Subgroup& k) {
    return conjugating_element(h, k).has_value();
}

std::vector<int> quotient_class_reps(const Subgroup& n, const Subgroup& h, std::mt19937_64* rng) {
    const auto& g = *n.parent();
    if (h.parent() != n.parent()) throw error("subgroups of different parent groups");
    if (!n.contains_all(h.indices())) throw not_normal("H is not contained in N");
    auto n_gens = n.small_generating_set();
    for (int s : n_gens) {
        auto conj = conjugate_subgroup(h, s);
        if (!(conj.indices() == h.indices())) throw not_normal("H is not normal in N");
    }

    // Cosets Hx for x in N, canonicalized by their minimal element.  Walking
    // the elements of N in ascending order makes the first unseen member of a
    // coset its canonical representative.
    const int o = g.order();
    std::vector<int> coset_of(static_cast<std::size_t>(o), -1);
    std::vector<int> canon; // canonical element of each coset
    std::vector<std::vector<int>> members;
    for (int x : n.indices()) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(canon.size());
        canon.push_back(x);
        members.emplace_back();
        for (int hh : h.indices()) {
            int y = g.mul(hh, x);
            coset_of[static_cast<std::size_t>(y)] = id;
            members.back().push_back(y);
        }
        std::sort(members.back().begin(), members.back().end());
    }
    const int num_cosets = static_cast<int>(canon.size());
    if (num_cosets * h.order() != n.order()) throw not_normal("coset partition is inconsistent");

    // Orbits of the conjugation action of N on the cosets.
    std::vector<int> orbit_of(static_cast<std::size_t>(num_cosets), -1);
    std::vector<std::vector<int>> orbits;
    for (int c = 0; c < num_cosets; ++c) {
        if (orbit_of[static_cast<std::size_t>(c)] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        orbits.emplace_back();
        std::vector<int> stack{c};
        orbit_of[static_cast<std::size_t>(c)] = oid;
        orbits.back().push_back(c);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int s : n_gens) {
                int image = coset_of[static_cast<std::size_t>(g.conj(s, canon[static_cast<std::size_t>(cur)]))];
                if (orbit_of[static_cast<std::size_t>(image)] < 0) {
                    orbit_of[static_cast<std::size_t>(image)] = oid;
                    orbits.back().push_back(image);
                    stack.push_back(image);
                }
            }
        }
    }

    std::vector<int> reps;
    reps.reserve(orbits.size());
    for (auto& orbit : orbits) {
        std::sort(orbit.begin(), orbit.end());
        if (rng == nullptr) {
            reps.push_back(canon[static_cast<std::size_t>(orbit.front())]);
        } else {
            int coset = orbit[std::uniform_int_distribution<std::size_t>(0, orbit.size() - 1)(*rng)];
            const auto& mem = members[static_cast<std::size_t>(coset)];
            reps.push_back(mem[std::uniform_int_distribution<std::size_t>(0, mem.size() - 1)(*rng)]);
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

} // namespace burnside
