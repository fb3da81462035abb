#include "burnside/marks.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <thread>

#include "burnside/errors.hpp"

namespace burnside {

using bigint = boost::multiprecision::cpp_int;

GhostVector to_ghost(const SignVector& u) {
    GhostVector g;
    g.values.reserve(u.signs.size());
    for (auto s : u.signs) g.values.push_back(s);
    return g;
}

namespace {

// Left transversal of H in G: the minimal element of each coset gH.
std::vector<int> left_transversal(const Subgroup& h) {
    const PermGroup& g = *h.parent();
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> reps;
    reps.reserve(static_cast<std::size_t>(g.order() / h.order()));
    for (int x = 0; x < g.order(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        reps.push_back(x);
        for (int hh : h.indices()) seen[static_cast<std::size_t>(g.mul(x, hh))] = 1;
    }
    return reps;
}

long long mark_impl(const PermGroup& g, const Subgroup& hi, const std::vector<int>& transversal,
                    const std::vector<char>& in_hi, const std::vector<int>& hj_gens) {
    // gH_i is fixed by H_j iff g^-1 H_j g lies in H_i.
    long long count = 0;
    for (int t : transversal) {
        int ti = g.inv(t);
        bool fixed = true;
        for (int s : hj_gens)
            if (!in_hi[static_cast<std::size_t>(g.mul(g.mul(ti, s), t))]) {
                fixed = false;
                break;
            }
        if (fixed) ++count;
    }
    return count;
}

} // namespace

long long mark(const Subgroup& hi, const Subgroup& hj) {
    if (hi.parent() != hj.parent()) throw error("subgroups of different parent groups");
    const PermGroup& g = *hi.parent();
    std::vector<char> in_hi(static_cast<std::size_t>(g.order()), 0);
    for (int x : hi.indices()) in_hi[static_cast<std::size_t>(x)] = 1;
    return mark_impl(g, hi, left_transversal(hi), in_hi, hj.small_generating_set());
}

MarksTable marks_table(const SubgroupClassList& classes, int jobs) {
    const PermGroup& g = *classes.parent();
    const int r = classes.size();
    std::vector<std::vector<int>> gens(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) gens[static_cast<std::size_t>(j)] = classes.rep(j).small_generating_set();

    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(r),
                                             std::vector<long long>(static_cast<std::size_t>(r), 0));
    auto compute_row = [&](int i) {
        const Subgroup& hi = classes.rep(i);
        auto transversal = left_transversal(hi);
        std::vector<char> in_hi(static_cast<std::size_t>(g.order()), 0);
        for (int x : hi.indices()) in_hi[static_cast<std::size_t>(x)] = 1;
        for (int j = 0; j < r; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mark_impl(g, hi, transversal, in_hi, gens[static_cast<std::size_t>(j)]);
    };

    if (jobs <= 1) {
        for (int i = 0; i < r; ++i) compute_row(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < r; i = next.fetch_add(1)) compute_row(i);
            });
        for (auto& th : pool) th.join();
    }

    // Structural invariants; a violation means the lattice itself is broken.
    for (int i = 0; i < r; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        const Subgroup& hi = classes.rep(i);
        for (int j = i + 1; j < r; ++j)
            if (row[static_cast<std::size_t>(j)] != 0)
                throw lattice_error("marks table is not lower triangular");
        if (row[static_cast<std::size_t>(i)] != classes.cls(i).normalizer.order() / hi.order())
            throw lattice_error("marks table diagonal violates |N_G(H)|/|H|");
        if (row[0] != g.order() / hi.order())
            throw lattice_error("marks table first column violates |G:H|");
        if (rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i)] != 1)
            throw lattice_error("marks table last row must be all ones");
    }
    return MarksTable(std::move(rows));
}

GhostVector marks_of(const BurnsideElement& b, const MarksTable& m) {
    const int r = m.size();
    if (static_cast<int>(b.multiplicities.size()) != r) throw error("length mismatch");
    GhostVector out;
    out.values.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        long long bi = b.multiplicities[static_cast<std::size_t>(i)];
        if (bi == 0) continue;
        for (int j = 0; j <= i; ++j)
            out.values[static_cast<std::size_t>(j)] += bi * m.entry(i, j);
    }
    return out;
}

DecomposeResult decompose(const GhostVector& x, const MarksTable& m) {
    const int r = m.size();
    if (static_cast<int>(x.values.size()) != r) throw error("length mismatch");
    std::vector<bigint> c(static_cast<std::size_t>(r));
    for (int j = r - 1; j >= 0; --j) {
        bigint acc = x.values[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < r; ++i)
            if (m.entry(i, j) != 0) acc -= c[static_cast<std::size_t>(i)] * m.entry(i, j);
        bigint quot, rem;
        boost::multiprecision::divide_qr(acc, bigint(m.entry(j, j)), quot, rem);
        if (rem != 0) {
            DecomposeResult res;
            res.integral = false;
            res.non_integral_index = j;
            return res;
        }
        c[static_cast<std::size_t>(j)] = std::move(quot);
    }
    DecomposeResult res;
    res.integral = true;
    res.element.multiplicities.reserve(static_cast<std::size_t>(r));
    for (const auto& v : c) {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            throw error("decomposition coefficient exceeds 64 bits");
        res.element.multiplicities.push_back(v.convert_to<long long>());
    }
    return res;
}

bool is_unit_in_burnside(const SignVector& u, const MarksTable& m) {
    for (auto s : u.signs)
        if (s != 1 && s != -1) throw error("sign vector entries must be +-1");
    return decompose(to_ghost(u), m).integral;
}

std::string marks_to_text(const MarksTable& m) {
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j <= i; ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(m.entry(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace burnside
