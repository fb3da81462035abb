#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace burnside {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1}, stored as its image table:
/// images()[k] is the image of point k.
class Permutation {
public:
    /// Validates that `images` is a bijection.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    Point apply(Point p) const { return images_[p]; }
    Point operator()(Point p) const { return images_[p]; }
    const std::vector<Point>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Multiplicative order: lcm of the cycle lengths.
    long long order() const;

    /// Cycle lengths in decreasing order (fixed points included).
    std::vector<int> cycle_type() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on image tables; makes the identity the least element.
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<Point> images, unchecked_tag) : images_(std::move(images)) {}

    std::vector<Point> images_;

    friend Permutation compose(const Permutation&, const Permutation&);
};

/// Product p*q with the right factor acting first: k -> p(q(k)).
/// This convention is fixed project-wide.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace burnside
