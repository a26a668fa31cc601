#include "cspsieve/perm.hpp"

#include <numeric>

namespace cspsieve {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw InvalidParams("Permutation: image is not a bijection on 0..n-1");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image_[static_cast<size_t>(v)] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int v = 0; v < size(); ++v) inv[static_cast<size_t>(image_[static_cast<size_t>(v)])] = v;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw InvalidParams("Permutation: size mismatch in compose");
    std::vector<int> image(image_.size());
    for (int v = 0; v < size(); ++v) image[static_cast<size_t>(v)] = (*this)(other(v));
    return Permutation(std::move(image));
}

Permutation Permutation::power(long long t) const {
    const long long ord = order();
    t %= ord;
    if (t < 0) t += ord;
    Permutation acc = identity(size());
    Permutation base = *this;
    while (t > 0) {
        if (t & 1) acc = acc.compose(base);
        base = base.compose(base);
        t >>= 1;
    }
    return acc;
}

long long Permutation::order() const {
    long long ord = 1;
    for (const auto& cyc : cycles()) ord = std::lcm(ord, static_cast<long long>(cyc.size()));
    return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (int v = 0; v < size(); ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        std::vector<int> cyc;
        int u = v;
        while (!seen[static_cast<size_t>(u)]) {
            seen[static_cast<size_t>(u)] = 1;
            cyc.push_back(u);
            u = (*this)(u);
        }
        out.push_back(std::move(cyc));
    }
    return out; // scan order makes each cycle min-first and the list sorted
}

} // namespace cspsieve
