#include "burnside/perm.hpp"

#include <algorithm>
#include <numeric>

#include "burnside/errors.hpp"

namespace burnside {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point v : images_) {
        if (v >= images_.size() || seen[v])
            throw error("permutation image table is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<Point> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im), unchecked_tag{});
}

Permutation Permutation::inverse() const {
    std::vector<Point> im(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k)
        im[images_[k]] = static_cast<Point>(k);
    return Permutation(std::move(im), unchecked_tag{});
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k)
        if (images_[k] != k) return false;
    return true;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lens;
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (seen[k]) continue;
        int len = 0;
        std::size_t p = k;
        do {
            seen[p] = true;
            ++len;
            p = images_[p];
        } while (p != k);
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

long long Permutation::order() const {
    long long ord = 1;
    for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long long>(len));
    return ord;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw degree_mismatch("cannot compose permutations of different degree");
    std::vector<Point> im(p.images_.size());
    for (std::size_t k = 0; k < im.size(); ++k)
        im[k] = p.images_[q.images_[k]];
    return Permutation(std::move(im), Permutation::unchecked_tag{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    // FNV-1a over the image words.
    std::size_t h = 1469598103934665603ull;
    for (Point v : p.images()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace burnside
