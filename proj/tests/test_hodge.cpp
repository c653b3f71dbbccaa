#include <catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "simplexion/errors.hpp"
#include "simplexion/hodge.hpp"
#include "simplexion/random.hpp"
#include "simplexion/refine.hpp"

using namespace simplexion;
using testkit::sets;

namespace {

// All vertex permutations of g that map simplices to simplices.
std::vector<VertexMap> brute_automorphisms(const Complex& g) {
    const auto& vs = g.vertices();
    std::vector<int> perm = vs;
    std::vector<VertexMap> out;
    const int size = vs.empty() ? 0 : vs.back() + 1;
    do {
        VertexMap t(size, -1);
        for (std::size_t i = 0; i < vs.size(); ++i) t[vs[i]] = perm[i];
        bool ok = true;
        for (const Simplex& s : g.simplices()) {
            std::vector<int> img;
            for (int v : s) img.push_back(t[v]);
            if (!g.contains(Simplex(img))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("exterior derivative", "[hodge]") {
    const ChainComplexData k2 = exterior_derivative(complete(2));
    CHECK(k2.d[0].dense() == [] {
        ExactMatrix m(1, 2);
        m(0, 0) = -1;
        m(0, 1) = 1;
        return m;
    }());
    CHECK(rank(exterior_derivative(cycle(4)).d[0]) == 3);
    for (const Complex& g : testkit::small_corpus()) {
        const ChainComplexData c = exterior_derivative(g);
        for (std::size_t k = 0; k + 1 < c.d.size(); ++k) CHECK(is_zero(sparse_multiply(c.d[k + 1], c.d[k])));
        const ExactMatrix d = full_derivative(g);
        CHECK(is_zero([&] {
            SparseMatrix s;
            s.rows = s.cols = g.size();
            s.entries.resize(g.size());
            const ExactMatrix dd = d * d;
            for (int i = 0; i < g.size(); ++i)
                for (int j = 0; j < g.size(); ++j)
                    if (dd(i, j) != 0) s.entries[i].push_back({j, dd(i, j).convert_to<std::int64_t>()});
            return s;
        }()));
        CHECK(dirac(g) == d + d.transpose());
        CHECK(hodge_laplacian(g) == dirac(g) * dirac(g));
    }
}

TEST_CASE("Betti numbers", "[hodge]") {
    CHECK(betti(cycle(4)).betti == std::vector<std::int64_t>{1, 1});
    CHECK(betti(cross_polytope(2)).betti == std::vector<std::int64_t>{1, 0, 1});
    CHECK(betti(icosahedron()).betti == std::vector<std::int64_t>{1, 0, 1});
    CHECK(betti(complete(3)).betti == std::vector<std::int64_t>{1, 0, 0});
    CHECK(betti(cross_polytope(3)).betti == std::vector<std::int64_t>{1, 0, 0, 1});
    auto corpus = testkit::small_corpus();
    for (const Complex& g : testkit::random_corpus(80, 7, 2024)) corpus.push_back(g);
    for (const Complex& g : corpus) {
        const CohomologyReport r = betti(g);
        CHECK(r.alternating_sum() == euler_characteristic(g));
        CHECK(r.betti == oracle::betti(sets(g)));
        CHECK(r.euler_poly == f_vector(g));
        if (g.size() <= 200) CHECK(numeric_betti(g) == r.betti);
    }
}

TEST_CASE("McKean-Singer", "[hodge]") {
    for (const Complex& g : {complete(2), cycle(4), cross_polytope(2), testkit::wheel(5), complete(4)}) {
        const McKeanSinger m = mckean_singer(g, {0.1, 1.0, 10.0});
        REQUIRE(m.exact.size() == 7);
        CHECK(m.exact[0] == euler_characteristic(g));
        for (int k = 1; k <= 6; ++k) CHECK(m.exact[k] == 0);
        CHECK(m.exact_holds());
        CHECK(m.numeric_holds(1e-8));
        for (double v : m.numeric) CHECK(std::abs(v - m.chi) < 1e-8);
    }
}

TEST_CASE("Lefschetz fixed point formula", "[hodge]") {
    const Complex c4 = cycle(4);
    const LefschetzReport id = lefschetz(c4, {0, 1, 2, 3});
    CHECK(id.cohomological == 0);
    const LefschetzReport rot = lefschetz(c4, {1, 2, 3, 0});
    CHECK(rot.cohomological == 0);
    CHECK(rot.fixed_point_sum == 0);
    const LefschetzReport refl = lefschetz(c4, {0, 3, 2, 1});
    CHECK(refl.cohomological == 2);
    CHECK(refl.fixed_point_sum == 2);
    CHECK_THROWS_AS(lefschetz(c4, {0, 2, 1, 3}), InvalidInput);
    for (const Complex& g : testkit::small_corpus()) {
        VertexMap idm(g.vertices().back() + 1, -1);
        for (int v : g.vertices()) idm[v] = v;
        const LefschetzReport r = lefschetz(g, idm);
        CHECK(r.cohomological == euler_characteristic(g));
        CHECK(r.holds());
    }
    for (int n = 3; n <= 8; ++n) {
        const auto autos = automorphisms(cycle(n));
        CHECK(autos.size() == static_cast<std::size_t>(2 * n));
        for (const VertexMap& t : autos) CHECK(lefschetz(cycle(n), t).holds());
    }
    const auto oct = automorphisms(cross_polytope(2));
    CHECK(oct.size() == 48);
    CHECK(oct.size() == brute_automorphisms(cross_polytope(2)).size());
    for (const VertexMap& t : oct) CHECK(lefschetz(cross_polytope(2), t).holds());
    const auto ico = automorphisms(icosahedron());
    CHECK(ico.size() == 120);
    for (std::size_t i = 0; i < ico.size(); i += 7) CHECK(lefschetz(icosahedron(), ico[i]).holds());
}

TEST_CASE("Kuenneth and strong ring spectra", "[hodge]") {
    const KuennethReport unit = kuenneth_check(cycle(4), complete(1));
    CHECK(unit.product.betti == std::vector<std::int64_t>{1, 1});
    CHECK(unit.passed());
    const KuennethReport torus = kuenneth_check(cycle(4), cycle(4));
    CHECK(torus.product.betti == std::vector<std::int64_t>{1, 2, 1});
    CHECK(torus.poincare_multiplicative);
    CHECK(torus.euler_multiplicative);
    CHECK(torus.connection_is_kronecker);
    CHECK(torus.hodge_spectrum_error < 1e-6);
    CHECK(torus.connection_spectrum_error < 1e-6);
    CHECK(kuenneth_check(complete(2), complete(3)).passed());
    CHECK(kuenneth_check(points(2), cycle(5)).passed());
    CHECK_THROWS_AS(kuenneth_check(cross_polytope(2), cross_polytope(2), 100), ResourceError);
}

TEST_CASE("interaction cohomology", "[hodge]") {
    const InteractionReport k2 = interaction_cohomology(complete(2));
    CHECK(k2.dd_zero);
    CHECK(k2.cohomology.alternating_sum() == -1);
    CHECK(k2.wu == -1);
    CHECK(interaction_cohomology(cycle(4)).cohomology.alternating_sum() == 0);
    CHECK(interaction_cohomology(complete(3)).cohomology.alternating_sum() == 1);
    for (const Complex& g : testkit::small_corpus()) {
        if (g.size() > 60) continue;
        const InteractionReport r = interaction_cohomology(g);
        CHECK(r.dd_zero);
        CHECK(r.cohomology.alternating_sum() == r.wu);
        CHECK(r.wu == oracle::wu(sets(g), 2));
    }
}

TEST_CASE("Wu curvature", "[hodge]") {
    auto total = [](const Complex& g) {
        Rational s = 0;
        for (const Rational& k : wu_curvature(g)) s += k;
        return s;
    };
    CHECK(total(complete(2)) == -1);
    CHECK(total(cycle(4)) == 0);
    CHECK(total(cross_polytope(2)) == 2);
    for (const Complex& g : testkit::random_corpus(60, 6, 71)) CHECK(total(g) == wu_characteristic(g, 2));
}

TEST_CASE("Alexander duality", "[hodge]") {
    const std::vector<int> v5{0, 1, 2, 3, 4};
    CHECK(reduced_betti(cycle(5)) == std::vector<std::int64_t>{0, 0, 1});
    CHECK(alexander_duality_check(cycle(5), v5));
    std::vector<std::vector<int>> bd;
    for (int skip = 0; skip < 5; ++skip) {
        std::vector<int> f;
        for (int v : v5)
            if (v != skip) f.push_back(v);
        bd.push_back(f);
    }
    const Complex sphere = Complex::close(bd);
    CHECK(alexander_duality_check(sphere, v5));
    const AlexanderDual ds = alexander_dual(sphere, v5);
    CHECK(ds.complex.empty());
    CHECK(ds.contains_empty);
    const AlexanderDual full = alexander_dual(complete(5), v5);
    CHECK(full.complex.empty());
    CHECK(!full.contains_empty);
    for (const Complex& g : testkit::random_corpus(40, 6, 5)) {
        std::vector<int> ground{0, 1, 2, 3, 4, 5};
        CHECK(alexander_duality_check(g, ground));
    }
}

TEST_CASE("Stokes pairing", "[hodge]") {
    const auto [lhs, rhs] = stokes_pairing(complete(2), 0, {BigInt(3), BigInt(10)}, {BigInt(1)});
    CHECK(lhs == 7);
    CHECK(rhs == 7);
    // Oriented edges 01, 03, 12, 23: the fundamental class is 01 + 12 + 23 - 03.
    const auto [zl, zr] = stokes_pairing(cycle(4), 0, {5, -2, 7, 1}, {1, -1, 1, 1});
    CHECK(zl == 0);
    CHECK(zr == 0);
    Rng rng(9);
    const Complex oct = cross_polytope(2);
    const FVector f = f_vector(oct);
    for (int t = 0; t < 100; ++t) {
        const int k = static_cast<int>(rng.below(2));
        std::vector<BigInt> form(f[k]), chain(f[k + 1]);
        for (auto& x : form) x = static_cast<int>(rng.below(11)) - 5;
        for (auto& x : chain) x = static_cast<int>(rng.below(11)) - 5;
        const auto [a, b] = stokes_pairing(oct, k, form, chain);
        CHECK(a == b);
    }
    CHECK_THROWS_AS(stokes_pairing(oct, 0, {1}, {1}), InvalidInput);
}
