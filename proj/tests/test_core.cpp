#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "simplexion/complex.hpp"
#include "simplexion/errors.hpp"
#include "simplexion/linalg.hpp"
#include "simplexion/io.hpp"

using namespace simplexion;
using testkit::sets;

TEST_CASE("close builds downward closures", "[core]") {
    CHECK(f_vector(Complex::close({{0, 1, 2}})) == FVector{3, 3, 1});
    CHECK(f_vector(Complex::close({{0}, {1}})) == FVector{2});
    const Complex tri = Complex::close({{0, 1}, {1, 2}, {2, 0}});
    CHECK(f_vector(tri) == FVector{3, 3});
    CHECK(euler_characteristic(tri) == 0);
    CHECK_THROWS_AS(Complex::close(std::vector<std::vector<int>>{{0, 1}, {}}), InvalidInput);
}

TEST_CASE("closure is idempotent and matches the subset oracle", "[core]") {
    for (const Complex& g : testkit::random_corpus(60, 7, 11)) {
        std::vector<std::vector<int>> raw;
        for (const auto& s : g.simplices()) raw.push_back(s.vertices());
        CHECK(Complex::close(raw) == g);
        const auto ref = oracle::ordered(oracle::closure(sets(g)));
        CHECK(ref == sets(g));
    }
}

TEST_CASE("simplex validation", "[core]") {
    CHECK_THROWS_AS(Simplex(std::vector<int>{}), InvalidInput);
    CHECK_THROWS_AS(Simplex(std::vector<int>{1, 1}), InvalidInput);
    CHECK_THROWS_AS(Simplex(std::vector<int>{-1}), InvalidInput);
    CHECK(Simplex({2, 0, 1}).vertices() == std::vector<int>{0, 1, 2});
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({0, 0}) == 0);
}

TEST_CASE("f-vectors and Euler characteristic", "[core]") {
    CHECK(f_vector(complete(3)) == FVector{3, 3, 1});
    CHECK(f_vector(cross_polytope(2)) == FVector{6, 12, 8});
    CHECK(f_vector(cycle(4)) == FVector{4, 4});
    CHECK(euler_characteristic(cross_polytope(2)) == 2);
    CHECK(euler_characteristic(complete(3)) == 1);
    CHECK(euler_characteristic(cycle(4)) == 0);
    CHECK(f_vector(Complex()).empty());
    CHECK(euler_characteristic(Complex()) == 0);
    for (const Complex& g : testkit::small_corpus()) {
        CHECK(f_vector(g) == oracle::fvector(sets(g)));
        CHECK(euler_characteristic(g) == oracle::euler(sets(g)));
        const FVector f = f_vector(g);
        std::int64_t total = 0;
        for (auto v : f) total += v;
        CHECK(total == g.size());
        if (!f.empty()) CHECK(f.back() > 0);
    }
}

TEST_CASE("generating function", "[core]") {
    CHECK(generating_function(cross_polytope(2)) == std::vector<std::int64_t>{1, 6, 12, 8});
    CHECK(generating_function(cycle(4)) == std::vector<std::int64_t>{1, 4, 4});
    CHECK(generating_function(complete(2)) == std::vector<std::int64_t>{1, 2, 1});
    for (const Complex& g : testkit::random_corpus(60, 7, 5)) {
        const auto f = generating_function(g);
        std::int64_t at_minus_one = 0;
        for (std::size_t k = 0; k < f.size(); ++k) at_minus_one += (k % 2 == 0 ? 1 : -1) * f[k];
        CHECK(f[0] - at_minus_one == euler_characteristic(g));
    }
}

TEST_CASE("Wu characteristic", "[core]") {
    CHECK(wu_characteristic(complete(2), 2) == -1);
    CHECK(wu_characteristic(complete(3), 2) == 1);
    for (int d = 0; d <= 3; ++d) CHECK(wu_characteristic(complete(d + 1), 2) == (d % 2 == 0 ? 1 : -1));
    for (int k = 1; k <= 4; ++k) CHECK(wu_characteristic(complete(1), k) == 1);
    for (const Complex& g : testkit::small_corpus()) {
        CHECK(wu_characteristic(g, 1) == euler_characteristic(g));
        if (g.size() <= 40) {
            CHECK(wu_characteristic(g, 2) == oracle::wu(sets(g), 2));
            if (g.size() <= 20) CHECK(wu_characteristic(g, 3) == oracle::wu(sets(g), 3));
        }
    }
    for (const Complex& g : testkit::random_corpus(40, 5, 9))
        CHECK(wu_characteristic(g, 2) == oracle::wu(sets(g), 2));
}

TEST_CASE("unit spheres", "[core]") {
    const Complex k2 = complete(2);
    const Complex s_edge = unit_sphere(k2, Simplex{0, 1});
    CHECK(f_vector(s_edge) == FVector{2});
    CHECK(euler_characteristic(s_edge) == 2);
    const Complex s_vertex = unit_sphere(k2, Simplex{0});
    CHECK(f_vector(s_vertex) == FVector{1});
    const Complex oct = cross_polytope(2);
    for (int v : oct.vertices()) CHECK(euler_characteristic(unit_sphere(oct, Simplex{v})) == 0);
    CHECK_THROWS_AS(unit_sphere(k2, Simplex{5}), NotFound);
}

TEST_CASE("unit sphere is the join of its lower and upper parts", "[core]") {
    auto poly = [](const std::vector<Simplex>& ss) {
        std::vector<std::int64_t> f(1, 1);
        for (const Simplex& y : ss) {
            if (static_cast<int>(f.size()) <= y.size()) f.resize(y.size() + 1, 0);
            ++f[y.size()];
        }
        return f;
    };
    for (const Complex& g : testkit::small_corpus()) {
        for (const Simplex& x : g.simplices()) {
            const Complex s = unit_sphere(g, x);
            std::vector<Simplex> lower, upper;
            for (const Simplex& y : s.simplices()) {
                bool all_below = true, all_above = true;
                for (int v : y) {
                    const bool below = g[v].subset_of(x);
                    all_below = all_below && below;
                    all_above = all_above && !below;
                }
                if (all_below) lower.push_back(y);
                if (all_above) upper.push_back(y);
            }
            const auto fl = poly(lower), fu = poly(upper);
            std::vector<std::int64_t> prod(fl.size() + fu.size() - 1, 0);
            for (std::size_t a = 0; a < fl.size(); ++a)
                for (std::size_t b = 0; b < fu.size(); ++b) prod[a + b] += fl[a] * fu[b];
            CHECK(generating_function(s) == prod);
            // the lower part is the refined boundary of x, a (dim x - 1)-sphere
            std::int64_t chi_lower = 0;
            for (const Simplex& y : lower) chi_lower += omega(y.dim());
            CHECK(chi_lower == 1 + omega(x.dim() - 1));
        }
    }
}

TEST_CASE("stars", "[core]") {
    const Complex k2 = complete(2);
    const auto up = star_up(k2, Simplex{0});
    CHECK(up == std::vector<Simplex>{Simplex{0}, Simplex{0, 1}});
    const Complex down = star_down(k2, Simplex{0, 1});
    CHECK(euler_characteristic(down) == 1);
    CHECK_THROWS_AS(star_up(k2, Simplex{3}), NotFound);
    for (const Complex& g : testkit::small_corpus()) {
        for (const Simplex& x : g.simplices()) {
            const auto wp = star_up(g, x);
            const Complex wm = star_down(g, x);
            std::int64_t chi = 0;
            for (const Simplex& y : wp)
                if (wm.contains(y)) chi += omega(y.dim());
            CHECK(chi == omega(x.dim()));
        }
    }
}

TEST_CASE("join multiplies generating functions", "[core]") {
    const Complex p2 = points(2);
    const Complex c4 = join(p2, p2).complex;
    CHECK(f_vector(c4) == FVector{4, 4});
    CHECK(f_vector(join(c4, p2).complex) == FVector{6, 12, 8});
    CHECK(join(Complex(), cycle(5)).complex == cycle(5));
    const auto corpus = testkit::small_corpus();
    for (std::size_t i = 0; i < corpus.size(); i += 2)
        for (std::size_t j = 0; j < corpus.size(); j += 3) {
            const Relabeled r = join(corpus[i], corpus[j]);
            const auto fa = generating_function(corpus[i]);
            const auto fb = generating_function(corpus[j]);
            std::vector<std::int64_t> prod(fa.size() + fb.size() - 1, 0);
            for (std::size_t a = 0; a < fa.size(); ++a)
                for (std::size_t b = 0; b < fb.size(); ++b) prod[a + b] += fa[a] * fb[b];
            CHECK(generating_function(r.complex) == prod);
        }
}

TEST_CASE("disjoint union adds f-vectors", "[core]") {
    CHECK(f_vector(disjoint_union(complete(1), complete(1)).complex) == FVector{2});
    CHECK(disjoint_union(cycle(4), Complex()).complex == cycle(4));
    CHECK(euler_characteristic(disjoint_union(cycle(4), complete(3)).complex) == 1);
    const Relabeled r = disjoint_union(cycle(4), cycle(4));
    CHECK(r.relabel.size() == 4);
    CHECK(f_vector(r.complex) == FVector{8, 8});
}

TEST_CASE("inductive dimension", "[core]") {
    CHECK(inductive_dimension(complete(1)) == 0);
    CHECK(inductive_dimension(Complex()) == -1);
    CHECK(inductive_dimension(refinement_graph(complete(3))) == 2);
    for (const Complex& g : testkit::small_corpus()) {
        const Rational d = inductive_dimension(g);
        CHECK(d <= g.dim());
    }
}

TEST_CASE("refinement graph and skeleton", "[core]") {
    const Complex k3 = complete(3);
    const Graph r = refinement_graph(k3);
    CHECK(r.n == 7);
    CHECK(r.edge_count() == 12);
    CHECK(is_flag(k3));
    CHECK(!is_flag(cycle(3)));
    CHECK(skeleton(cycle(5)).edge_count() == 5);
    CHECK(!carrier(cycle(3)).on_skeleton);
    CHECK(carrier(cycle(4)).on_skeleton);
}

TEST_CASE("JSON round trip", "[core][io]") {
    const Complex g = Complex::close({{3, 1, 2}, {2, 5}, {7}});
    const Json j = complex_to_json(g, "demo");
    CHECK(j["name"] == "demo");
    CHECK(j["facets"][0] == Json::array({1, 2, 3}));
    CHECK(complex_from_json(j) == g);
    CHECK(complex_from_json(Json::parse(R"({"facets": []})")).empty());
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[]]})")), InvalidInput);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"nope": 1})")), InvalidInput);
}

TEST_CASE("exact linear algebra agrees with oracles", "[core][linalg]") {
    for (const Complex& g : testkit::random_corpus(30, 4, 3)) {
        if (g.size() > 8) continue;
        ExactMatrix l(g.size(), g.size());
        const auto ref = oracle::connection(sets(g));
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j) l(i, j) = ref[i][j];
        CHECK(det_exact(l) == oracle::cofactor_det(ref));
        const auto cp = charpoly_berkowitz(l);
        const auto lv = oracle::leverrier(ref);
        REQUIRE(cp.size() == lv.size());
        for (std::size_t k = 0; k < cp.size(); ++k) CHECK(oracle::Q(cp[k]) == lv[k]);
    }
    ExactMatrix m(3, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = 1;
    CHECK(rank_exact(m) == 2);
    CHECK(det_exact(m) == 0);
}
