#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace simplexion {

// Nonempty, strictly increasing set of vertex ids.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<int> vs) : Simplex(std::vector<int>(vs)) {}
    // Sorts the input; rejects empty input, negative ids and repeats.
    explicit Simplex(std::vector<int> vs);
    static Simplex from_sorted(std::vector<int> vs) {
        Simplex s;
        s.v_ = std::move(vs);
        return s;
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int i) const { return v_[i]; }
    const std::vector<int>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(int v) const;
    bool subset_of(const Simplex& y) const;
    // The face obtained by deleting the j-th vertex.
    Simplex without(int j) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    // Canonical order: by dimension, then lexicographic.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        if (a.v_.size() != b.v_.size()) return a.v_.size() <=> b.v_.size();
        return a.v_ <=> b.v_;
    }

private:
    std::vector<int> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

bool intersects(const Simplex& a, const Simplex& b);
Simplex set_union(const Simplex& a, const Simplex& b);
// Sign of the permutation sorting seq; 0 if seq has repeats.
int permutation_sign(std::vector<int> seq);

}  // namespace simplexion
