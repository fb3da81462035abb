#include "burnside/group_builders.hpp"

#include <numeric>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

Permutation cycle_perm(int degree, const std::vector<int>& cycle) {
    std::vector<Point> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t k = 0; k < cycle.size(); ++k)
        im[static_cast<std::size_t>(cycle[k])] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    return Permutation(std::move(im));
}

std::vector<int> iota_cycle(int from, int len) {
    std::vector<int> c(static_cast<std::size_t>(len));
    std::iota(c.begin(), c.end(), from);
    return c;
}

} // namespace

GroupPtr symmetric(int n, int order_cap) {
    if (n < 1) throw error("symmetric group needs n >= 1");
    if (n == 1) return PermGroup::generate(1, {Permutation::identity(1)}, order_cap);
    std::vector<Permutation> gens{cycle_perm(n, {0, 1}), cycle_perm(n, iota_cycle(0, n))};
    return PermGroup::generate(n, std::move(gens), order_cap);
}

GroupPtr alternating(int n, int order_cap) {
    if (n < 1) throw error("alternating group needs n >= 1");
    if (n <= 2) return PermGroup::generate(std::max(n, 1), {Permutation::identity(std::max(n, 1))}, order_cap);
    if (n == 3) return PermGroup::generate(3, {cycle_perm(3, {0, 1, 2})}, order_cap);
    std::vector<Permutation> gens{cycle_perm(n, {0, 1, 2})};
    if (n % 2 == 1)
        gens.push_back(cycle_perm(n, iota_cycle(0, n)));
    else
        gens.push_back(cycle_perm(n, iota_cycle(1, n - 1)));
    return PermGroup::generate(n, std::move(gens), order_cap);
}

GroupPtr cyclic(int n, int order_cap) {
    if (n < 1) throw error("cyclic group needs n >= 1");
    if (n == 1) return PermGroup::generate(1, {Permutation::identity(1)}, order_cap);
    return PermGroup::generate(n, {cycle_perm(n, iota_cycle(0, n))}, order_cap);
}

GroupPtr dihedral(int order, int order_cap) {
    if (order < 2 || order % 2 != 0) throw error("dihedral group needs an even order >= 2");
    const int n = order / 2;
    if (n == 1) return cyclic(2, order_cap);
    if (n == 2) return elementary_abelian(2, order_cap);
    std::vector<Point> refl(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) refl[static_cast<std::size_t>(k)] = static_cast<Point>((n - k) % n);
    std::vector<Permutation> gens{cycle_perm(n, iota_cycle(0, n)), Permutation(std::move(refl))};
    return PermGroup::generate(n, std::move(gens), order_cap);
}

GroupPtr elementary_abelian(int k, int order_cap) {
    if (k < 0) throw error("elementary abelian rank must be nonnegative");
    if (k == 0) return PermGroup::generate(1, {Permutation::identity(1)}, order_cap);
    const int degree = 2 * k;
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) gens.push_back(cycle_perm(degree, {2 * i, 2 * i + 1}));
    return PermGroup::generate(degree, std::move(gens), order_cap);
}

GroupPtr direct_product(const PermGroup& a, const PermGroup& b, int order_cap) {
    const int degree = a.degree() + b.degree();
    std::vector<Permutation> gens;
    for (const auto& g : a.generators()) {
        std::vector<Point> im(static_cast<std::size_t>(degree));
        for (int k = 0; k < a.degree(); ++k) im[static_cast<std::size_t>(k)] = g(static_cast<Point>(k));
        for (int k = 0; k < b.degree(); ++k)
            im[static_cast<std::size_t>(a.degree() + k)] = static_cast<Point>(a.degree() + k);
        gens.emplace_back(std::move(im));
    }
    for (const auto& g : b.generators()) {
        std::vector<Point> im(static_cast<std::size_t>(degree));
        for (int k = 0; k < a.degree(); ++k) im[static_cast<std::size_t>(k)] = static_cast<Point>(k);
        for (int k = 0; k < b.degree(); ++k)
            im[static_cast<std::size_t>(a.degree() + k)] = static_cast<Point>(a.degree() + g(static_cast<Point>(k)));
        gens.emplace_back(std::move(im));
    }
    return PermGroup::generate(degree, std::move(gens), order_cap);
}

GroupPtr semidirect_inversion(const std::vector<int>& odd_orders, int order_cap) {
    if (odd_orders.empty()) throw error("semidirect inversion needs at least one factor");
    long long size = 1;
    for (int m : odd_orders) {
        if (m < 3 || m % 2 == 0)
            throw error("semidirect inversion factors must be odd and at least 3");
        size *= m;
        if (size > 65535) throw error("abelian part too large for the point representation");
    }
    const int degree = static_cast<int>(size);

    // Points are the elements of A = C_{m_1} x ... x C_{m_t} in mixed-radix
    // encoding; translations by the unit vectors generate A and the extra
    // generator inverts every element.
    auto encode = [&](const std::vector<int>& tuple) {
        long long idx = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) idx = idx * odd_orders[i] + tuple[i];
        return static_cast<int>(idx);
    };
    auto decode = [&](int idx) {
        std::vector<int> tuple(odd_orders.size());
        for (std::size_t i = odd_orders.size(); i-- > 0;) {
            tuple[i] = idx % odd_orders[i];
            idx /= odd_orders[i];
        }
        return tuple;
    };

    std::vector<Permutation> gens;
    for (std::size_t f = 0; f < odd_orders.size(); ++f) {
        std::vector<Point> im(static_cast<std::size_t>(degree));
        for (int x = 0; x < degree; ++x) {
            auto t = decode(x);
            t[f] = (t[f] + 1) % odd_orders[f];
            im[static_cast<std::size_t>(x)] = static_cast<Point>(encode(t));
        }
        gens.emplace_back(std::move(im));
    }
    std::vector<Point> inv_im(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) {
        auto t = decode(x);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = (odd_orders[i] - t[i]) % odd_orders[i];
        inv_im[static_cast<std::size_t>(x)] = static_cast<Point>(encode(t));
    }
    gens.emplace_back(std::move(inv_im));
    return PermGroup::generate(degree, std::move(gens), order_cap);
}

} // namespace burnside
