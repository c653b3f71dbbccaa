#include "simplexion/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "simplexion/errors.hpp"

namespace simplexion {

Simplex::Simplex(std::vector<int> vs) : v_(std::move(vs)) {
    if (v_.empty()) throw InvalidInput("simplex must be nonempty");
    std::sort(v_.begin(), v_.end());
    if (v_.front() < 0) throw InvalidInput("vertex ids must be non-negative");
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end()) throw InvalidInput("repeated vertex in simplex");
}

bool Simplex::contains(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::subset_of(const Simplex& y) const {
    return v_.size() <= y.v_.size() && std::includes(y.v_.begin(), y.v_.end(), v_.begin(), v_.end());
}

Simplex Simplex::without(int j) const {
    std::vector<int> w;
    w.reserve(v_.size() - 1);
    for (int i = 0; i < size(); ++i)
        if (i != j) w.push_back(v_[i]);
    return from_sorted(std::move(w));
}

bool intersects(const Simplex& a, const Simplex& b) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

Simplex set_union(const Simplex& a, const Simplex& b) {
    std::vector<int> u;
    u.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return Simplex::from_sorted(std::move(u));
}

int permutation_sign(std::vector<int> seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        while (true) {
            std::size_t m = i;
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                if (seq[j] < seq[m]) m = j;
            if (m == i) break;
            std::swap(seq[i], seq[m]);
            sign = -sign;
        }
        if (i + 1 < seq.size() && seq[i] == seq[i + 1]) return 0;
    }
    return sign;
}

std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ']';
    return os.str();
}

}  // namespace simplexion
