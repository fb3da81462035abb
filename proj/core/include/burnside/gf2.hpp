#pragma once

#include <cstdint>
#include <vector>

namespace burnside {

/// A fixed-width bit vector over GF(2), packed into 64-bit words.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(int width)
        : width_(width), words_(static_cast<std::size_t>((width + 63) / 64), 0) {}

    int width() const { return width_; }
    bool get(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[static_cast<std::size_t>(i) >> 6] |= mask;
        else
            words_[static_cast<std::size_t>(i) >> 6] &= ~mask;
    }
    void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    /// Index of the first set bit, -1 if zero.
    int leading() const;
    bool zero() const;
    int popcount() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
    friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) { return a.words_ < b.words_; }

private:
    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Parity of the bitwise AND (the GF(2) inner product).
bool gf2_dot(const Gf2Vector& a, const Gf2Vector& b);

struct Gf2Matrix {
    int width = 0;
    std::vector<Gf2Vector> rows;
};

struct RrefResult {
    Gf2Matrix matrix;        // reduced row-echelon form, zero rows dropped
    std::vector<int> pivots; // pivot column per retained row
    int rank = 0;
};

RrefResult rref(const Gf2Matrix& m);

/// Basis of {x : Mx = 0} in canonical free-variable form; its size is
/// width - rank.
std::vector<Gf2Vector> nullspace(const Gf2Matrix& m);

/// Canonical (RREF) basis of the span of the given rows.
std::vector<Gf2Vector> rref_span(const std::vector<Gf2Vector>& rows, int width);

/// Canonical basis of the image of span(basis) under projection onto the
/// given coordinates (in ascending order of `coords`).
std::vector<Gf2Vector> project_span(const std::vector<Gf2Vector>& basis,
                                    const std::vector<int>& coords);

/// Membership test against an RREF basis.
bool in_span(const std::vector<Gf2Vector>& rref_basis, Gf2Vector v);

bool spans_equal(const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b, int width);

} // namespace burnside
