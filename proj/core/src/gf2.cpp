#include "burnside/gf2.hpp"

#include <algorithm>
#include <bit>

namespace burnside {

int Gf2Vector::leading() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return -1;
}

bool Gf2Vector::zero() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

int Gf2Vector::popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool gf2_dot(const Gf2Vector& a, const Gf2Vector& b) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < a.words().size(); ++w) acc ^= a.words()[w] & b.words()[w];
    return std::popcount(acc) & 1;
}

RrefResult rref(const Gf2Matrix& m) {
    std::vector<Gf2Vector> rows = m.rows;
    std::vector<int> pivots;
    std::size_t done = 0;
    for (int col = 0; col < m.width && done < rows.size(); ++col) {
        std::size_t pivot_row = done;
        while (pivot_row < rows.size() && !rows[pivot_row].get(col)) ++pivot_row;
        if (pivot_row == rows.size()) continue;
        std::swap(rows[done], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != done && rows[r].get(col)) rows[r] ^= rows[done];
        pivots.push_back(col);
        ++done;
    }
    rows.resize(done);
    RrefResult out;
    out.matrix.width = m.width;
    out.matrix.rows = std::move(rows);
    out.pivots = std::move(pivots);
    out.rank = static_cast<int>(done);
    return out;
}

std::vector<Gf2Vector> nullspace(const Gf2Matrix& m) {
    RrefResult r = rref(m);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.width), 0);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<Gf2Vector> basis;
    basis.reserve(static_cast<std::size_t>(m.width - r.rank));
    for (int free_col = 0; free_col < m.width; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        Gf2Vector v(m.width);
        v.set(free_col, true);
        // Each pivot variable is the sum of the free variables in its row.
        for (std::size_t row = 0; row < r.matrix.rows.size(); ++row)
            if (r.matrix.rows[row].get(free_col)) v.set(r.pivots[row], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Gf2Vector> rref_span(const std::vector<Gf2Vector>& rows, int width) {
    Gf2Matrix m;
    m.width = width;
    m.rows = rows;
    return rref(m).matrix.rows;
}

std::vector<Gf2Vector> project_span(const std::vector<Gf2Vector>& basis,
                                    const std::vector<int>& coords) {
    std::vector<Gf2Vector> projected;
    projected.reserve(basis.size());
    for (const auto& v : basis) {
        Gf2Vector p(static_cast<int>(coords.size()));
        for (std::size_t t = 0; t < coords.size(); ++t)
            if (v.get(coords[t])) p.set(static_cast<int>(t), true);
        projected.push_back(std::move(p));
    }
    return rref_span(projected, static_cast<int>(coords.size()));
}

bool in_span(const std::vector<Gf2Vector>& rref_basis, Gf2Vector v) {
    for (const auto& row : rref_basis) {
        int lead = row.leading();
        if (lead >= 0 && v.get(lead)) v ^= row;
    }
    return v.zero();
}

bool spans_equal(const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b, int width) {
    return rref_span(a, width) == rref_span(b, width);
}

} // namespace burnside
