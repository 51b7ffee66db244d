#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "operad_forge/rational.hpp"

namespace operad_forge {

/// A permutation of {1..n}, stored as the image sequence (1-indexed
/// everywhere, matching the labels used by the operads).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size() + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    /// (a*b)(i) = a(b(i))
    Permutation compose(const Permutation& b) const {
        if (size() != b.size()) throw std::invalid_argument("size mismatch in compose");
        std::vector<int> v(size());
        for (int i = 1; i <= size(); ++i) v[i - 1] = (*this)(b(i));
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(size());
        for (int i = 1; i <= size(); ++i) v[(*this)(i) - 1] = i;
        return Permutation(std::move(v));
    }

    int sign() const {
        int inv = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Sign acquired when homogeneous factors of the given degrees are
/// reordered by `perm` (factor i moves to position perm(i)): the product
/// of (-1)^{deg_i * deg_j} over all transposed pairs i < j.
inline Scalar koszul_sign(const Permutation& perm, std::span<const int> degrees) {
    if (perm.size() != static_cast<int>(degrees.size()))
        throw std::invalid_argument("koszul_sign: degree list does not match permutation size");
    long exp = 0;
    for (int i = 1; i <= perm.size(); ++i)
        for (int j = i + 1; j <= perm.size(); ++j)
            if (perm(i) > perm(j)) exp += long(degrees[i - 1]) * degrees[j - 1];
    return exp % 2 == 0 ? Scalar(1) : Scalar(-1);
}

/// The permutation of m+n-1 labels induced on p o_i q by acting with
/// sigma on p and tau on q; composition is equivariant against it:
/// act(sigma, p) o_{sigma(i)} act(tau, q) = act(block_compose(sigma, i,
/// tau), p o_i q).
inline Permutation block_compose(const Permutation& sigma, int i, const Permutation& tau) {
    int m = sigma.size(), n = tau.size();
    if (i < 1 || i > m) throw std::invalid_argument("block_compose: slot out of range");
    std::vector<int> img(m + n - 1);
    for (int l = 1; l <= m; ++l) {
        if (l == i) {
            for (int t = 1; t <= n; ++t) img[i - 1 + t - 1] = sigma(i) - 1 + tau(t);
        } else {
            int x = l < i ? l : l + n - 1;
            img[x - 1] = sigma(l) < sigma(i) ? sigma(l) : sigma(l) + n - 1;
        }
    }
    return Permutation(std::move(img));
}

/// All sigma in S_{p+q} with sigma(1)<...<sigma(p) and
/// sigma(p+1)<...<sigma(p+q), in lexicographic order of the image tuple.
/// There are binomial(p+q, p) of them.
inline std::vector<Permutation> unshuffles(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("unshuffles: negative block size");
    int n = p + q;
    std::vector<Permutation> out;
    // choose the image set of the first block; both blocks are then sorted
    std::vector<int> pick(p);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        std::vector<int> img;
        img.reserve(n);
        img.insert(img.end(), pick.begin(), pick.end());
        std::vector<char> used(n + 1, 0);
        for (int v : pick) used[v] = 1;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) img.push_back(v);
        out.push_back(Permutation(std::move(img)));
        // next p-subset of {1..n} in lex order
        int i = p - 1;
        while (i >= 0 && pick[i] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace operad_forge
