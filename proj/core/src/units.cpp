#include "burnside/units.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <thread>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

// Canonical name of the coset R*x: the minimal element index of the coset.
int coset_canonical(const PermGroup& g, const Subgroup& r, int x) {
    int best = g.order();
    for (int t : r.indices()) best = std::min(best, g.mul(t, x));
    return best;
}

} // namespace

TwoQuotientData two_quotient(const Subgroup& h, std::mt19937_64* rng) {
    const GroupPtr& gp = h.parent();
    const PermGroup& g = *gp;

    Subgroup n = normalizer(h);
    // R = <H, N', squares of N>: the smallest subgroup over H whose quotient
    // in N is elementary abelian of exponent 2.
    Subgroup nder = derived_subgroup(n);
    std::vector<int> seed = h.indices();
    seed.insert(seed.end(), nder.indices().begin(), nder.indices().end());
    for (int x : n.indices()) seed.push_back(g.mul(x, x));
    Subgroup r = subgroup_closure(gp, seed);

    long long quot = n.order() / r.order();
    if (n.order() % r.order() != 0 || (quot & (quot - 1)) != 0)
        throw verification_error("N/R is not an elementary abelian 2-group");
    int m = 0;
    while ((1LL << m) < quot) ++m;

    TwoQuotientData data{h, std::move(n), std::move(r), {}, {}};

    // Canonicalized R-cosets of N, in ascending canonical order: the first
    // unseen element of a coset is its minimal member.
    std::vector<int> cosets;
    {
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        for (int x : data.normalizer.indices()) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            cosets.push_back(x);
            for (int t : data.kernel.indices()) seen[static_cast<std::size_t>(g.mul(t, x))] = 1;
        }
    }
    std::vector<int> scan = cosets;
    if (rng != nullptr) std::shuffle(scan.begin(), scan.end(), *rng);

    // Greedy basis: keep a coset iff it is not yet in the span of the kept
    // ones, extending the coordinate table of the span as we go.
    data.coset_coords.reserve(static_cast<std::size_t>(quot) * 2);
    data.coset_coords.emplace(cosets.empty() ? 0 : cosets.front(), 0u); // identity coset
    std::vector<int> span_members{cosets.empty() ? 0 : cosets.front()};
    for (int c : scan) {
        if (data.m() == m) break;
        if (data.coset_coords.count(c)) continue;
        std::uint32_t bit = std::uint32_t{1} << data.m();
        int rep = c;
        if (rng != nullptr) {
            // any member of the coset names the same basis vector
            const auto& kern = data.kernel.indices();
            rep = g.mul(kern[std::uniform_int_distribution<std::size_t>(0, kern.size() - 1)(*rng)], c);
        }
        data.basis.push_back(CosetBasisElement{c, rep});
        std::vector<int> snapshot = span_members;
        for (int s : snapshot) {
            int prod = coset_canonical(g, data.kernel, g.mul(s, c));
            data.coset_coords.emplace(prod, data.coset_coords.at(s) | bit);
            span_members.push_back(prod);
        }
    }
    if ((1LL << data.m()) != quot)
        throw verification_error("could not find a full GF(2) basis of N/R");
    return data;
}

std::uint32_t coset_decompose(const TwoQuotientData& data, int n) {
    if (!data.normalizer.contains(n)) throw error("element lies outside the normalizer");
    int canon = coset_canonical(*data.subgroup.parent(), data.kernel, n);
    return data.coset_coords.at(canon);
}

SubgroupEquations equations_for(const SubgroupClassList& classes, int class_index,
                                std::optional<std::uint64_t> seed) {
    const Subgroup& h = classes.rep(class_index);
    const GroupPtr& gp = classes.parent();

    std::mt19937_64 rng;
    std::mt19937_64* rng_ptr = nullptr;
    if (seed) {
        rng.seed(*seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(class_index + 1));
        rng_ptr = &rng;
    }

    TwoQuotientData data = two_quotient(h, rng_ptr);
    const int m = data.m();
    const int r = classes.size();
    const int p = class_index;

    SubgroupEquations eqs;
    eqs.class_index = class_index;
    eqs.local_var_count = m;

    std::vector<Gf2Vector> rows;
    for (int qj : quotient_class_reps(data.normalizer, h, rng_ptr)) {
        std::vector<int> seed_elems = h.indices();
        seed_elems.push_back(qj);
        Subgroup cj = subgroup_closure(gp, seed_elems);
        int q = classes.index_of(cj);
        std::uint32_t alpha = coset_decompose(data, qj);

        Gf2Vector row(m + r);
        for (int k = 0; k < m; ++k)
            if (alpha & (std::uint32_t{1} << k)) row.set(k, true);
        row.flip(m + p);
        row.flip(m + q); // p == q cancels to zero, as it should
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    eqs.rows = std::move(rows);
    return eqs;
}

namespace {

SignVector to_sign_vector(const Gf2Vector& v) {
    SignVector u;
    u.signs.reserve(static_cast<std::size_t>(v.width()));
    for (int i = 0; i < v.width(); ++i) u.signs.push_back(v.get(i) ? -1 : 1);
    return u;
}

Gf2Vector to_bits(const SignVector& u) {
    Gf2Vector v(static_cast<int>(u.signs.size()));
    for (std::size_t i = 0; i < u.signs.size(); ++i)
        if (u.signs[i] < 0) v.set(static_cast<int>(i), true);
    return v;
}

} // namespace

UnitGroupResult unit_group(const SubgroupClassList& classes, const MarksTable& marks,
                           std::optional<std::uint64_t> seed, int jobs) {
    const int r = classes.size();
    std::vector<SubgroupEquations> per_class(static_cast<std::size_t>(r));

    if (jobs <= 1) {
        for (int i = 0; i < r; ++i) per_class[static_cast<std::size_t>(i)] = equations_for(classes, i, seed);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < r; i = next.fetch_add(1))
                    per_class[static_cast<std::size_t>(i)] = equations_for(classes, i, seed);
            });
        for (auto& th : pool) th.join();
    }

    // One global system over (l-blocks in class order, then v_1..v_r).  The
    // l-variables are not eliminated symbolically; projecting the nullspace
    // onto the v-coordinates is the same elimination done linear-algebraically.
    std::vector<int> offset(static_cast<std::size_t>(r), 0);
    int total_l = 0;
    for (int i = 0; i < r; ++i) {
        offset[static_cast<std::size_t>(i)] = total_l;
        total_l += per_class[static_cast<std::size_t>(i)].local_var_count;
    }
    const int width = total_l + r;

    Gf2Matrix global;
    global.width = width;
    for (int i = 0; i < r; ++i) {
        const auto& eqs = per_class[static_cast<std::size_t>(i)];
        const int m = eqs.local_var_count;
        for (const auto& row : eqs.rows) {
            if (row.zero()) continue;
            Gf2Vector out(width);
            for (int k = 0; k < m; ++k)
                if (row.get(k)) out.set(offset[static_cast<std::size_t>(i)] + k, true);
            for (int t = 0; t < r; ++t)
                if (row.get(m + t)) out.set(total_l + t, true);
            global.rows.push_back(std::move(out));
        }
    }

    std::vector<int> v_coords(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) v_coords[static_cast<std::size_t>(t)] = total_l + t;
    std::vector<Gf2Vector> v_basis = project_span(nullspace(global), v_coords);

    UnitGroupResult result;
    result.rank = static_cast<int>(v_basis.size());
    result.basis.reserve(v_basis.size());
    for (const auto& v : v_basis) {
        SignVector u = to_sign_vector(v);
        if (!is_unit_in_burnside(u, marks))
            throw verification_error("computed unit fails the marks-table membership test");
        result.basis.push_back(std::move(u));
    }

    Gf2Vector all_minus(r);
    for (int t = 0; t < r; ++t) all_minus.set(t, true);
    if (!in_span(v_basis, all_minus))
        throw verification_error("the all-minus unit is missing from the computed span");

    result.all_verified = true;
    return result;
}

UnitGroupResult unit_group(const GroupPtr& g) {
    auto classes = class_list(g);
    auto marks = marks_table(classes);
    return unit_group(classes, marks);
}

std::vector<SignVector> brute_force_units(const MarksTable& marks, int cap_r) {
    const int r = marks.size();
    if (r > cap_r)
        throw oracle_cap_exceeded("brute-force unit search over r = " + std::to_string(r) +
                                  " classes exceeds the cap of " + std::to_string(cap_r));
    std::vector<SignVector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        SignVector u;
        u.signs.reserve(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) u.signs.push_back((mask >> i) & 1 ? -1 : 1);
        if (is_unit_in_burnside(u, marks)) out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignVector> span_of_units(const std::vector<SignVector>& units) {
    if (units.empty()) return {};
    const std::size_t r = units.front().signs.size();
    std::vector<Gf2Vector> bits;
    bits.reserve(units.size());
    for (const auto& u : units) bits.push_back(to_bits(u));
    auto basis = rref_span(bits, static_cast<int>(r));

    std::vector<SignVector> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        Gf2Vector acc(static_cast<int>(r));
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (mask & (std::uint64_t{1} << k)) acc ^= basis[k];
        out.push_back(to_sign_vector(acc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool unit_spans_equal(const std::vector<SignVector>& a, const std::vector<SignVector>& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    const int r = static_cast<int>(a.front().signs.size());
    std::vector<Gf2Vector> abits, bbits;
    for (const auto& u : a) abits.push_back(to_bits(u));
    for (const auto& u : b) bbits.push_back(to_bits(u));
    return spans_equal(abits, bbits, r);
}

std::vector<SignVector> abelian_basis_units(const SubgroupClassList& classes,
                                            const MarksTable& marks) {
    const GroupPtr& gp = classes.parent();
    if (!gp->abelian()) throw not_abelian("abelian_basis_units needs an abelian group");
    const int r = classes.size();

    // n from the largest elementary abelian 2-quotient of G itself.
    TwoQuotientData tq = two_quotient(Subgroup::trivial(gp));
    const int n = tq.m();

    std::vector<int> index2_classes;
    for (int i = 0; i < r; ++i)
        if (2 * classes.rep(i).order() == gp->order()) index2_classes.push_back(i);
    if (static_cast<long long>(index2_classes.size()) != (1LL << n) - 1)
        throw verification_error("index-2 subgroup count does not match 2^n - 1");

    std::vector<SignVector> lambdas;
    for (int i : index2_classes) {
        const Subgroup& ni = classes.rep(i);
        SignVector lam;
        lam.signs.reserve(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c)
            lam.signs.push_back(ni.contains_all(classes.rep(c).indices()) ? 1 : -1);
        lambdas.push_back(std::move(lam));
    }

    std::vector<SignVector> out;
    SignVector lambda_g;
    lambda_g.signs.assign(static_cast<std::size_t>(r), 1);
    for (const auto& lam : lambdas) {
        SignVector neg;
        neg.signs.reserve(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c) {
            neg.signs.push_back(static_cast<std::int8_t>(-lam.signs[static_cast<std::size_t>(c)]));
            lambda_g.signs[static_cast<std::size_t>(c)] =
                static_cast<std::int8_t>(lambda_g.signs[static_cast<std::size_t>(c)] *
                                         lam.signs[static_cast<std::size_t>(c)]);
        }
        out.push_back(std::move(neg));
    }
    if (n == 0) lambda_g.signs.assign(static_cast<std::size_t>(r), -1);
    out.push_back(std::move(lambda_g));

    for (const auto& u : out)
        if (!is_unit_in_burnside(u, marks))
            throw verification_error("abelian basis unit fails the membership test");
    return out;
}

std::vector<SignVector> inversion_units(const SubgroupClassList& classes, const MarksTable& marks) {
    const GroupPtr& gp = classes.parent();
    const PermGroup& g = *gp;
    const int r = classes.size();

    // Recover A as the set of odd-order elements and check the construction:
    // |G| = 2|A|, A abelian, and the outer involution inverts A.
    std::vector<int> a_elems;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) % 2 == 1) a_elems.push_back(x);
    if (g.order() % 2 != 0 || static_cast<int>(a_elems.size()) * 2 != g.order())
        throw wrong_construction("group is not an odd abelian part extended by an inversion");
    Subgroup a = [&] {
        try {
            return Subgroup(gp, a_elems);
        } catch (const lattice_error&) {
            throw wrong_construction("odd-order elements do not form a subgroup");
        }
    }();
    if (!a.abelian()) throw wrong_construction("odd part is not abelian");
    int outer = -1;
    for (int x = 0; x < g.order(); ++x)
        if (!a.contains(x)) {
            outer = x;
            break;
        }
    for (int x : a.indices())
        if (g.conj(outer, x) != g.inv(x))
            throw wrong_construction("the outer involution does not invert the abelian part");

    // Odd-order classes are exactly the subgroups N <= A (all normal, class
    // size 1); each even class is the class of <N, inv> for N = rep ∩ A.
    std::vector<int> odd_classes, even_classes;
    for (int i = 0; i < r; ++i) {
        if (classes.rep(i).order() % 2 == 1) {
            if (classes.cls(i).size != 1)
                throw wrong_construction("subgroup of the odd part is not normal");
            odd_classes.push_back(i);
        } else {
            even_classes.push_back(i);
        }
    }
    if (odd_classes.size() != even_classes.size())
        throw wrong_construction("class pairing between N and <N, inv> is broken");

    std::unordered_map<int, int> even_for_odd; // odd class -> its <N, inv> class
    for (int j : even_classes) {
        std::vector<int> inter;
        for (int x : classes.rep(j).indices())
            if (a.contains(x)) inter.push_back(x);
        int odd_idx = classes.index_of(inter);
        if (!even_for_odd.emplace(odd_idx, j).second)
            throw wrong_construction("two even classes share the same odd part");
    }

    std::vector<SignVector> out;
    for (int i : odd_classes) {
        SignVector u;
        u.signs.assign(static_cast<std::size_t>(r), 1);
        u.signs[static_cast<std::size_t>(even_for_odd.at(i))] = -1;
        out.push_back(std::move(u));
    }
    SignVector minus;
    minus.signs.assign(static_cast<std::size_t>(r), -1);
    out.push_back(std::move(minus));

    for (const auto& u : out)
        if (!is_unit_in_burnside(u, marks))
            throw verification_error("inversion-family unit fails the membership test");
    return out;
}

long long omega2_dim(const SubgroupClassList& classes) {
    const PermGroup& g = *classes.parent();
    const auto& all = classes.all_subgroups_with_class();

    long long total = 0;
    for (int i = 0; i < classes.size(); ++i) {
        const Subgroup& h = classes.rep(i);
        total += 1; // the pair (H, H)
        if (h.order() % 2 != 0) continue;

        const std::size_t half = static_cast<std::size_t>(h.order() / 2);
        std::vector<char> in_h(static_cast<std::size_t>(g.order()), 0);
        for (int x : h.indices()) in_h[static_cast<std::size_t>(x)] = 1;

        // Index-2 subgroups of H, i.e. the stored subgroups of half the order
        // contained in H, counted up to conjugation by N_G(H).
        std::vector<std::vector<int>> cands;
        for (const auto& [key, cls] : all) {
            if (key.size() != half) continue;
            bool inside = true;
            for (int x : key)
                if (!in_h[static_cast<std::size_t>(x)]) {
                    inside = false;
                    break;
                }
            if (inside) cands.push_back(key);
        }

        auto n_gens = classes.cls(i).normalizer.small_generating_set();
        std::vector<char> used(cands.size(), 0);
        std::sort(cands.begin(), cands.end());
        for (std::size_t c = 0; c < cands.size(); ++c) {
            if (used[c]) continue;
            ++total;
            std::vector<std::vector<int>> stack{cands[c]};
            used[c] = 1;
            while (!stack.empty()) {
                auto cur = std::move(stack.back());
                stack.pop_back();
                for (int s : n_gens) {
                    std::vector<int> img;
                    img.reserve(cur.size());
                    for (int x : cur) img.push_back(g.conj(s, x));
                    std::sort(img.begin(), img.end());
                    auto it = std::lower_bound(cands.begin(), cands.end(), img);
                    std::size_t pos = static_cast<std::size_t>(it - cands.begin());
                    if (it == cands.end() || *it != img)
                        throw lattice_error("conjugate of an index-2 subgroup left the candidate set");
                    if (!used[pos]) {
                        used[pos] = 1;
                        stack.push_back(std::move(img));
                    }
                }
            }
        }
    }
    return total;
}

long long gaussian_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw error("gaussian binomial needs 0 <= k <= n");
    using bigint = boost::multiprecision::cpp_int;
    auto q_factorial = [](int t) {
        bigint f = 1;
        for (int i = 1; i <= t; ++i) f *= (bigint(1) << i) - 1;
        return f;
    };
    bigint num = q_factorial(n);
    bigint den = q_factorial(k) * q_factorial(n - k);
    bigint quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw error("gaussian binomial is not an integer (internal error)");
    if (quot > std::numeric_limits<long long>::max())
        throw error("gaussian binomial exceeds 64 bits");
    return quot.convert_to<long long>();
}

ConjectureReport conjecture_check(const SubgroupClassList& classes, const UnitGroupResult& units) {
    ConjectureReport rep;
    rep.lhs = units.rank - 1;
    rep.rhs = omega2_dim(classes) - classes.size();
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

} // namespace burnside
