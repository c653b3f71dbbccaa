#include "simplexion/geom.hpp"

#include <algorithm>
#include <cmath>

#include "simplexion/build.hpp"
#include "simplexion/errors.hpp"
#include "simplexion/hodge.hpp"
#include "simplexion/random.hpp"

namespace simplexion {

bool is_locally_injective(const Graph& g, const VertexFunction& f) {
    if (static_cast<int>(f.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (f[v] == f[w]) return false;
    return true;
}

namespace {

std::vector<int> lower_neighbours(const Graph& g, const VertexFunction& f, int v) {
    std::vector<int> s;
    for (int w : g.adj[v])
        if (f[w] < f[v]) s.push_back(w);
    return s;
}

void require_injective(const Graph& g, const VertexFunction& f) {
    if (static_cast<int>(f.size()) != g.n) throw InvalidInput("function has wrong length");
    if (!is_locally_injective(g, f)) throw InvalidInput("function is not locally injective");
}

}  // namespace

std::int64_t ph_index(const Graph& g, const VertexFunction& f, int v) {
    require_injective(g, f);
    if (v < 0 || v >= g.n) throw InvalidInput("ph_index: vertex out of range");
    return 1 - whitney_euler(g, lower_neighbours(g, f, v));
}

std::vector<std::int64_t> ph_indices(const Graph& g, const VertexFunction& f) {
    require_injective(g, f);
    std::vector<std::int64_t> out(g.n);
    for (int v = 0; v < g.n; ++v) out[v] = 1 - whitney_euler(g, lower_neighbours(g, f, v));
    return out;
}

std::int64_t ph_index(const Complex& g, const VertexFunction& f, int x) {
    return ph_index(refinement_graph(g), f, x);
}

std::vector<std::int64_t> ph_indices(const Complex& g, const VertexFunction& f) {
    return ph_indices(refinement_graph(g), f);
}

CurvatureEstimate curvature_expectation(const Graph& g, int v, std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("curvature_expectation: trials must be positive");
    if (v < 0 || v >= g.n) throw InvalidInput("curvature_expectation: vertex out of range");
    VertexFunction f(g.n);
    std::vector<int> perm(g.n);
    double sum = 0, sum2 = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        for (int i = 0; i < g.n; ++i) perm[i] = i;
        rng.shuffle(perm);
        for (int i = 0; i < g.n; ++i) f[perm[i]] = i;
        const double idx = static_cast<double>(1 - whitney_euler(g, lower_neighbours(g, f, v)));
        sum += idx;
        sum2 += idx * idx;
    }
    CurvatureEstimate e;
    e.trials = trials;
    e.mean = sum / trials;
    const double var = trials > 1 ? (sum2 - trials * e.mean * e.mean) / (trials - 1) : 0.0;
    e.stderr_ = std::sqrt(std::max(var, 0.0) / trials);
    return e;
}

Rational levitt_curvature(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw InvalidInput("levitt_curvature: vertex out of range");
    Rational k = 1;
    const auto c = clique_counts(g, g.adj[v]);
    for (std::size_t j = 0; j < c.size(); ++j) {
        const Rational term(c[j], static_cast<std::int64_t>(j + 2));
        k += (j % 2 == 0) ? Rational(-term) : term;
    }
    return k;
}

std::vector<Rational> levitt_curvatures(const Graph& g) {
    std::vector<Rational> out;
    for (int v = 0; v < g.n; ++v) out.push_back(levitt_curvature(g, v));
    return out;
}

Rational valuation_eval(const Valuation& x, const Complex& g) {
    const FVector f = f_vector(g);
    Rational s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k >= x.size()) {
            if (f[k] != 0) throw InvalidInput("valuation_eval: complex has higher dimension than valuation");
            continue;
        }
        s += x[k] * f[k];
    }
    return s;
}

Complex complex_intersection(const Complex& a, const Complex& b) {
    std::vector<Simplex> out;
    std::set_intersection(a.simplices().begin(), a.simplices().end(), b.simplices().begin(), b.simplices().end(),
                          std::back_inserter(out));
    return Complex::from_closed(std::move(out));
}

Complex complex_union(const Complex& a, const Complex& b) {
    std::vector<Simplex> out;
    std::set_union(a.simplices().begin(), a.simplices().end(), b.simplices().begin(), b.simplices().end(),
                   std::back_inserter(out));
    return Complex::from_closed(std::move(out));
}

bool valuation_check(const Valuation& x, const Complex& a, const Complex& b) {
    return valuation_eval(x, complex_intersection(a, b)) + valuation_eval(x, complex_union(a, b)) ==
           valuation_eval(x, a) + valuation_eval(x, b);
}

Valuation dehn_sommerville(int k, int d) {
    if (k < 0 || k > d) throw InvalidInput("dehn_sommerville: need 0 <= k <= d");
    Valuation x(d + 1, Rational(0));
    x[k] += 1;
    for (int j = k; j <= d - 1; ++j) {
        const BigInt c = binomial(j + 1, k + 1);
        x[j] += ((j + d) % 2 == 0) ? Rational(c) : Rational(-c);
    }
    return x;
}

bool ds_curvature_check(const Graph& g, int d) {
    if (!is_d_graph(g, d)) throw InvalidInput("ds_curvature_check: not a " + std::to_string(d) + "-graph");
    std::vector<Valuation> xs;
    for (int k = 0; k < d; ++k) xs.push_back(dehn_sommerville(k, d));
    for (int v = 0; v < g.n; ++v) {
        const auto f = clique_counts(g, g.adj[v]);
        for (const Valuation& x : xs) {
            Rational s = 0;
            for (std::size_t j = 0; j < f.size(); ++j) s += x.at(j) * f[j];
            if (s != 0) return false;
        }
    }
    return true;
}

bool ds_curvature_check(const Complex& g) { return ds_curvature_check(carrier(g).graph, g.dim()); }

namespace {

// Induced subgraph on a sorted subset, relabelled to 0..k-1.
Graph induced(const Graph& g, const std::vector<int>& subset) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (int w : neighbours_in(g, subset[i], subset)) {
            const int j = static_cast<int>(std::lower_bound(subset.begin(), subset.end(), w) - subset.begin());
            if (static_cast<int>(i) < j) e.emplace_back(static_cast<int>(i), j);
        }
    return Graph::from_edges(static_cast<int>(subset.size()), e);
}

}  // namespace

Complex level_surface(const Complex& g, const std::map<int, double>& f, double c) {
    for (int v : g.vertices()) {
        auto it = f.find(v);
        if (it == f.end()) throw InvalidInput("level_surface: function missing vertex " + std::to_string(v));
        if (it->second == c) throw InvalidInput("level_surface: level value lies in the range of f");
    }
    std::vector<int> chosen;
    for (int i = 0; i < g.size(); ++i) {
        double lo = INFINITY, hi = -INFINITY;
        for (int v : g[i]) {
            lo = std::min(lo, f.at(v));
            hi = std::max(hi, f.at(v));
        }
        if (lo < c && c < hi) chosen.push_back(i);
    }
    return whitney(induced(refinement_graph(g), chosen), chosen);
}

Recognizer::Recognizer(const Graph& root, std::int64_t budget) : g_(root), budget_(budget) {}

std::vector<int> Recognizer::all() const {
    std::vector<int> s(g_.n);
    for (int i = 0; i < g_.n; ++i) s[i] = i;
    return s;
}

std::vector<int> Recognizer::unit_sphere(const std::vector<int>& subset, int v) const {
    return neighbours_in(g_, v, subset);
}

std::vector<int> Recognizer::remove(const std::vector<int>& subset, int v) {
    std::vector<int> s;
    s.reserve(subset.size());
    for (int w : subset)
        if (w != v) s.push_back(w);
    return s;
}

void Recognizer::tick() {
    if (++nodes_ > budget_) throw ResourceError("recognition budget of " + std::to_string(budget_) + " nodes exceeded");
}

bool Recognizer::contractible(const std::vector<int>& s) {
    if (s.empty()) return false;
    if (s.size() == 1) return true;
    if (auto it = contractible_.find(s); it != contractible_.end()) return it->second;
    tick();
    bool result = false;
    bool cone = false;
    for (int v : s)
        if (neighbours_in(g_, v, s).size() + 1 == s.size()) {
            cone = true;
            break;
        }
    if (cone) {
        result = true;
    } else {
        for (int v : s)
            if (contractible(unit_sphere(s, v))) {
                result = contractible(remove(s, v));
                break;
            }
    }
    contractible_.emplace(s, result);
    return result;
}

bool Recognizer::sphere(const std::vector<int>& s, int d) {
    if (d < -1) return false;
    if (d == -1) return s.empty();
    if (s.empty()) return false;
    auto key = std::make_pair(s, d);
    if (auto it = sphere_.find(key); it != sphere_.end()) return it->second;
    tick();
    bool result = true;
    for (int v : s)
        if (!sphere(unit_sphere(s, v), d - 1)) {
            result = false;
            break;
        }
    if (result) {
        result = false;
        for (int v : s)
            if (contractible(remove(s, v))) {
                result = true;
                break;
            }
    }
    sphere_.emplace(std::move(key), result);
    return result;
}

bool Recognizer::d_graph(const std::vector<int>& s, int d) {
    if (d < -1) return false;
    if (d == -1) return s.empty();
    if (s.empty()) return false;
    for (int v : s)
        if (!sphere(unit_sphere(s, v), d - 1)) return false;
    return true;
}

bool Recognizer::ball(const std::vector<int>& s, int d) {
    if (d < 0 || s.empty()) return false;
    if (d == 0) return s.size() == 1;
    auto key = std::make_pair(s, d);
    if (auto it = ball_.find(key); it != ball_.end()) return it->second;
    tick();
    bool result = true;
    std::vector<int> rim;
    for (int v : s) {
        const auto u = unit_sphere(s, v);
        if (ball(u, d - 1)) rim.push_back(v);
        else if (!sphere(u, d - 1)) {
            result = false;
            break;
        }
    }
    result = result && !rim.empty() && sphere(rim, d - 1) && contractible(s);
    ball_.emplace(std::move(key), result);
    return result;
}

std::optional<std::vector<int>> Recognizer::contraction_order(const std::vector<int>& subset) {
    if (subset.empty()) return std::nullopt;
    std::vector<int> cur = subset, order;
    while (cur.size() > 1) {
        int pick = -1;
        for (int v : cur)
            if (contractible(unit_sphere(cur, v))) {
                pick = v;
                break;
            }
        if (pick < 0) return std::nullopt;
        order.push_back(pick);
        cur = remove(cur, pick);
    }
    order.push_back(cur[0]);
    return order;
}

bool is_contractible(const Graph& g) {
    Recognizer r(g);
    return r.contractible(r.all());
}
bool is_d_graph(const Graph& g, int d) {
    Recognizer r(g);
    return r.d_graph(r.all(), d);
}
bool is_d_sphere(const Graph& g, int d) {
    Recognizer r(g);
    return r.sphere(r.all(), d);
}
bool is_d_ball(const Graph& g, int d) {
    Recognizer r(g);
    return r.ball(r.all(), d);
}
bool is_contractible(const Complex& g) { return is_contractible(refinement_graph(g)); }
bool is_d_graph(const Complex& g, int d) { return is_d_graph(refinement_graph(g), d); }
bool is_d_sphere(const Complex& g, int d) { return is_d_sphere(refinement_graph(g), d); }
bool is_d_ball(const Complex& g, int d) { return is_d_ball(refinement_graph(g), d); }

Complex boundary(const Complex& g, int d) {
    const Graph r = refinement_graph(g);
    Recognizer rec(r);
    const auto all = rec.all();
    std::vector<Simplex> out;
    for (int i = 0; i < g.size(); ++i)
        if (rec.ball(rec.unit_sphere(all, i), d - 1)) out.push_back(g[i]);
    return Complex::close(out);
}

MorseReport morse_analysis(const Graph& g, const VertexFunction& f) {
    require_injective(g, f);
    Recognizer rec(g);
    MorseReport rep;
    rep.index.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        const auto s = lower_neighbours(g, f, v);
        const int d = static_cast<int>(clique_counts(g, s).size()) - 1;
        if (rec.contractible(s)) continue;
        if (!rec.sphere(s, d)) {
            if (rep.is_morse) rep.first_failure = v;
            rep.is_morse = false;
            continue;
        }
        rep.index[v] = d + 1;
        if (static_cast<int>(rep.counts.size()) <= d + 1) rep.counts.resize(d + 2, 0);
        ++rep.counts[d + 1];
    }
    rep.betti = betti(whitney(g)).betti;
    if (rep.is_morse) {
        const std::size_t m = std::max(rep.counts.size(), rep.betti.size());
        auto at = [](const std::vector<std::int64_t>& v, std::size_t k) { return k < v.size() ? v[k] : 0; };
        rep.weak_holds = rep.strong_holds = true;
        std::int64_t run = 0;
        for (std::size_t p = 0; p < m; ++p) {
            const std::int64_t diff = at(rep.counts, p) - at(rep.betti, p);
            if (diff < 0) rep.weak_holds = false;
            run += (p % 2 == 0) ? diff : -diff;
            if (((p % 2 == 0) ? run : -run) < 0) rep.strong_holds = false;
        }
    }
    return rep;
}

MorseReport morse_analysis(const Complex& g, const VertexFunction& f_on_simplices) {
    return morse_analysis(refinement_graph(g), f_on_simplices);
}

std::vector<int> critical_points(const Graph& g, const VertexFunction& f) {
    require_injective(g, f);
    Recognizer rec(g);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (!rec.contractible(lower_neighbours(g, f, v))) out.push_back(v);
    return out;
}

ReebResult reeb_sphere_check(const Graph& g, int d) {
    if (!is_d_sphere(g, d)) throw InvalidInput("reeb_sphere_check: not a " + std::to_string(d) + "-sphere");
    ReebResult res;
    Recognizer rec(g);
    const auto all = rec.all();
    try {
        for (int x : all) {
            const auto order = rec.contraction_order(Recognizer::remove(all, x));
            if (!order) continue;
            // Adding vertices back in reverse removal order keeps every
            // lower sphere contractible except at the first and at x.
            VertexFunction f(g.n);
            const int k = static_cast<int>(order->size());
            for (int i = 0; i < k; ++i) f[(*order)[k - 1 - i]] = i;
            f[x] = k;
            auto crit = critical_points(g, f);
            if (crit.size() == 2) {
                res.success = true;
                res.f = std::move(f);
                res.critical = std::move(crit);
                return res;
            }
        }
    } catch (const ResourceError&) {
    }
    res.indeterminate = true;
    return res;
}

ReebResult reeb_sphere_check(const Complex& g, int d) { return reeb_sphere_check(refinement_graph(g), d); }

}  // namespace simplexion
