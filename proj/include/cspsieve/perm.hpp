#pragma once

#include <vector>

#include "cspsieve/errors.hpp"

namespace cspsieve {

/// Bijection on vertex ids 0..n-1, stored as its image array.
class Permutation {
  public:
    explicit Permutation(std::vector<int> image); // validates bijectivity
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[static_cast<size_t>(v)]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    Permutation inverse() const;
    // composition: (a.compose(b))(v) = a(b(v))
    Permutation compose(const Permutation& other) const;
    Permutation power(long long t) const; // negative t uses the inverse

    long long order() const; // lcm of cycle lengths
    // cycles in canonical form: each starts at its minimum element, list
    // sorted by those minima
    std::vector<std::vector<int>> cycles() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }

  private:
    std::vector<int> image_;
};

} // namespace cspsieve
