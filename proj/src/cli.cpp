#include "simplexion/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "simplexion/build.hpp"
#include "simplexion/conn.hpp"
#include "simplexion/errors.hpp"
#include "simplexion/geom.hpp"
#include "simplexion/hodge.hpp"
#include "simplexion/linalg.hpp"
#include "simplexion/numeric.hpp"
#include "simplexion/random.hpp"
#include "simplexion/refine.hpp"
#include "simplexion/spectra.hpp"

namespace simplexion {

int default_cap() {
    if (const char* env = std::getenv("SIMPLEXION_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return kDefaultExactCap;
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "unimodularity", "energy",        "inertia",        "hydrogen", "dual-product", "gauss-bonnet", "poincare-hopf",
        "dehn-sommerville", "euler-poincare", "mckean-singer", "wu",     "boundary",     "sard",         "lefschetz",
        "kuenneth",      "zeta-symmetry", "trees",          "stokes",   "alexander"};
    return names;
}

std::vector<std::string> parse_suite(const std::string& spec) {
    if (spec == "all") return suite_names();
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end())
            throw InvalidInput("unknown suite '" + item + "'");
        out.push_back(item);
    }
    if (out.empty()) throw InvalidInput("empty suite");
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
    const Complex& g;
    VerifyOptions opt;
    std::optional<ConnectionData> cd;

    const ConnectionData& conn() {
        if (!cd) cd = connection_data(g, opt.cap);
        return *cd;
    }
    const ExactMatrix& green() {
        const ConnectionData& c = conn();
        if (c.green.rows() != g.size()) throw InternalError("connection matrix is not unimodular");
        return c.green;
    }
};

struct Outcome {
    std::string status;
    Json witness = Json::object();
};

Outcome pass(Json w = Json::object()) { return {"pass", std::move(w)}; }
Outcome fail(Json w = Json::object()) { return {"fail", std::move(w)}; }
Outcome verdict(bool ok, Json w) { return {ok ? "pass" : "fail", std::move(w)}; }
Outcome skipped(const std::string& why) { return {"skipped:" + why, Json::object()}; }

Json big(const BigInt& x) { return x.str(); }
Json rat(const Rational& x) { return x.str(); }

Outcome check_unimodularity(Context& c) {
    const BigInt& d = c.conn().det;
    return verdict(abs(d) == 1, {{"det", big(d)}});
}

Outcome check_energy(Context& c) {
    const BigInt e = energy(c.green());
    const std::int64_t chi = euler_characteristic(c.g);
    const TraceIdentity t = trace_identity(c.g, c.green());
    return verdict(e == chi && t.holds(), {{"energy", big(e)},
                                          {"chi", chi},
                                          {"trace", big(t.trace)},
                                          {"sphere_sum", t.sphere_sum},
                                          {"derivative", t.derivative}});
}

Outcome check_inertia(Context& c) {
    const ConnectionData& cd = c.conn();
    const int n = c.g.size();
    const Inertia in = n > kBerkowitzLimit ? inertia_from_minors(cd.leading_minors) : inertia_exact(cd.l);
    const std::int64_t chi = euler_characteristic(c.g);
    Json w{{"p", in.p}, {"n", in.n}, {"z", in.z}, {"method", in.method}, {"chi", chi}};
    bool ok = in.p - in.n == chi;
    if (n <= 1500) {
        int np = 0, nn = 0;
        for (double x : eig_symmetric(to_real(cd.l)).values) {
            if (x > 1e-8) ++np;
            else if (x < -1e-8) ++nn;
        }
        w["numeric_p"] = np;
        w["numeric_n"] = nn;
        ok = ok && np == in.p && nn == in.n;
    }
    return verdict(ok, w);
}

Outcome check_hydrogen(Context& c) {
    if (c.g.dim() != 1) return skipped("dim≠1");
    return verdict(hydrogen_check(c.g, c.green()), {});
}

Outcome check_dual_product(Context& c) {
    if (c.g.size() > 400) return skipped("more than 400 simplices");
    const DualProductReport r = dual_product_check(c.g, c.green());
    return verdict(r.passed(), {{"det", big(r.det)},
                                {"one_minus_chi", r.one_minus_chi},
                                {"inverse_form", r.inverse_form_claim},
                                {"literal_eigen_claim", r.literal_checked ? Json(r.literal_eigen_claim) : Json()}});
}

Outcome check_gauss_bonnet(Context& c) {
    const Carrier car = carrier(c.g);
    Rational s = 0;
    for (const Rational& k : levitt_curvatures(car.graph)) s += k;
    const std::int64_t chi = euler_characteristic(c.g);
    return verdict(s == chi, {{"sum", rat(s)}, {"chi", chi}, {"carrier", car.on_skeleton ? "skeleton" : "refinement"}});
}

Outcome check_poincare_hopf(Context& c) {
    const Graph r = refinement_graph(c.g);
    const std::int64_t chi = euler_characteristic(c.g);
    std::vector<int> perm(r.n);
    VertexFunction f(r.n);
    for (std::int64_t t = 0; t < c.opt.trials; ++t) {
        Rng rng = Rng::for_trial(c.opt.seed, static_cast<std::uint64_t>(t));
        for (int i = 0; i < r.n; ++i) perm[i] = i;
        rng.shuffle(perm);
        for (int i = 0; i < r.n; ++i) f[perm[i]] = i;
        std::int64_t s = 0;
        for (std::int64_t x : ph_indices(r, f)) s += x;
        if (s != chi) return fail({{"trial", t}, {"sum", s}, {"chi", chi}, {"function", f}});
    }
    return pass({{"trials", c.opt.trials}, {"chi", chi}});
}

Outcome check_dehn_sommerville(Context& c) {
    const int d = c.g.dim();
    if (d < 1) return skipped("dimension below 1");
    const Graph r = carrier(c.g).graph;
    if (!is_d_graph(r, d)) return skipped("not a d-graph");
    return verdict(ds_curvature_check(r, d), {{"d", d}});
}

Outcome check_euler_poincare(Context& c) {
    const CohomologyReport r = betti(c.g);
    const std::int64_t chi = euler_characteristic(c.g);
    return verdict(r.alternating_sum() == chi, {{"betti", r.betti}, {"chi", chi}});
}

Outcome check_mckean_singer(Context& c) {
    if (c.g.size() > 600) return skipped("more than 600 simplices");
    const McKeanSinger ms = mckean_singer(c.g, {0.1, 1.0, 10.0});
    Json ex = Json::array();
    for (const BigInt& x : ms.exact) ex.push_back(big(x));
    return verdict(ms.exact_holds() && ms.numeric_holds(1e-8),
                   {{"chi", ms.chi}, {"exact", ex}, {"times", ms.times}, {"numeric", ms.numeric}});
}

Outcome check_wu(Context& c) {
    if (c.g.size() > 600) return skipped("more than 600 simplices");
    const InteractionReport ir = interaction_cohomology(c.g);
    Rational k = 0;
    for (const Rational& x : wu_curvature(c.g)) k += x;
    const bool ok = ir.dd_zero && ir.cohomology.alternating_sum() == ir.wu && k == Rational(ir.wu);
    return verdict(ok, {{"wu", big(ir.wu)},
                        {"interaction_betti", ir.cohomology.betti},
                        {"curvature_sum", rat(k)},
                        {"dd_zero", ir.dd_zero}});
}

bool is_d_complex(const Complex& g, int d) {
    const Graph r = refinement_graph(g);
    Recognizer rec(r);
    const auto all = rec.all();
    for (int i = 0; i < g.size(); ++i) {
        const auto s = rec.unit_sphere(all, i);
        if (!rec.sphere(s, d - 1) && !rec.ball(s, d - 1)) return false;
    }
    return true;
}

Outcome check_boundary(Context& c) {
    if (c.g.size() > 400) return skipped("more than 400 simplices");
    const int d = c.g.dim();
    if (d < 1 || !is_d_complex(c.g, d)) return skipped("not a d-complex");
    const Complex b = boundary(c.g, d);
    const std::int64_t chi = euler_characteristic(c.g), chib = euler_characteristic(b);
    const BigInt w = wu_characteristic(c.g, 2);
    const bool bb = b.empty() || boundary(b, d - 1).empty();
    return verdict(chi - w == chib && bb,
                   {{"chi", chi}, {"wu", big(w)}, {"boundary_chi", chib}, {"boundary_size", b.size()}, {"dd_empty", bb}});
}

Outcome check_sard(Context& c) {
    if (c.g.size() > 400) return skipped("more than 400 simplices");
    const int d = c.g.dim();
    if (d < 1 || !is_d_graph(carrier(c.g).graph, d)) return skipped("not a d-graph");
    const auto& vs = c.g.vertices();
    std::vector<int> perm(vs.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    Rng rng(c.opt.seed);
    rng.shuffle(perm);
    std::map<int, double> f;
    for (std::size_t i = 0; i < vs.size(); ++i) f[vs[i]] = perm[i];
    const double level = std::floor(vs.size() / 2.0) - 0.5;
    const Complex s = level_surface(c.g, f, level);
    const bool ok = is_d_graph(carrier(s).graph, d - 1);
    return verdict(ok, {{"level", level}, {"f_vector", f_vector(s)}, {"chi", euler_characteristic(s)}});
}

Outcome check_lefschetz(Context& c) {
    if (c.g.vertices().size() > 16 || c.g.size() > 300) return skipped("complex too large for automorphism search");
    const auto auts = automorphisms(c.g);
    std::size_t tested = 0;
    for (const VertexMap& t : auts) {
        if (tested++ >= 200) break;
        const LefschetzReport r = lefschetz(c.g, t);
        if (!r.holds())
            return fail({{"map", t}, {"cohomological", rat(r.cohomological)}, {"fixed_point_sum", big(r.fixed_point_sum)}});
    }
    return pass({{"automorphisms", auts.size()}, {"tested", std::min<std::size_t>(tested, 200)}});
}

Outcome check_kuenneth(Context& c) {
    if (static_cast<std::int64_t>(c.g.size()) * c.g.size() > 1024) return skipped("product above 1024 cells");
    const KuennethReport r = kuenneth_check(c.g, c.g, 1024);
    return verdict(r.passed(1e-6), {{"product_betti", r.product.betti},
                                    {"poincare", r.poincare_multiplicative},
                                    {"euler", r.euler_multiplicative},
                                    {"hodge_error", r.hodge_spectrum_error},
                                    {"kronecker", r.connection_is_kronecker},
                                    {"connection_error", r.connection_spectrum_error}});
}

Outcome check_zeta(Context& c) {
    if (c.g.dim() != 1) return skipped("dim≠1");
    if (c.g.size() > 1500) return skipped("more than 1500 simplices");
    const double e = zeta_symmetry_error(c.g, {0.5, 1.0, 2.0});
    const SpectralSymmetry s = spectral_symmetry(c.g, c.green());
    return verdict(e < 1e-8 && s.holds(), {{"error", e}, {"charpoly_equal", s.holds()}});
}

Outcome check_trees(Context& c) {
    const Graph sk = skeleton(c.g);
    if (sk.n > 200) return skipped("more than 200 vertices");
    const TreeForest tf = tree_forest_numbers(sk);
    // Second route: matrix-tree theorem per component and sum of |c_k|.
    std::vector<int> comp(sk.n, -1);
    int nc = 0;
    for (int s = 0; s < sk.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : sk.adj[v])
                if (comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    BigInt rooted = 1;
    const ExactMatrix k = kirchhoff(sk);
    for (int q = 0; q < nc; ++q) {
        std::vector<int> vs;
        for (int v = 0; v < sk.n; ++v)
            if (comp[v] == q) vs.push_back(v);
        const int m = static_cast<int>(vs.size());
        ExactMatrix red(m - 1, m - 1);
        for (int i = 1; i < m; ++i)
            for (int j = 1; j < m; ++j) red(i - 1, j - 1) = k(vs[i], vs[j]);
        rooted *= m * (m > 1 ? det_exact(red) : BigInt(1));
    }
    BigInt forest = 0;
    for (const BigInt& x : charpoly_berkowitz(k)) forest += abs(x);
    return verdict(rooted == tf.tree && forest == tf.forest,
                   {{"tree", big(tf.tree)}, {"forest", big(tf.forest)}, {"tree_minors", big(rooted)}, {"forest_coeffs", big(forest)}});
}

Outcome check_stokes(Context& c) {
    const ChainComplexData cc = exterior_derivative(c.g);
    Rng rng(c.opt.seed);
    for (int k = 0; k + 1 < static_cast<int>(cc.dims.size()); ++k) {
        std::vector<BigInt> form(cc.dims[k]), chain(cc.dims[k + 1]);
        for (auto& x : form) x = static_cast<std::int64_t>(rng.below(7)) - 3;
        for (auto& x : chain) x = static_cast<std::int64_t>(rng.below(7)) - 3;
        const auto [lhs, rhs] = stokes_pairing(c.g, k, form, chain);
        if (lhs != rhs) return fail({{"degree", k}, {"df_of_chain", big(lhs)}, {"f_of_boundary", big(rhs)}});
    }
    return pass();
}

Outcome check_alexander(Context& c) {
    if (c.g.vertices().size() > 14) return skipped("more than 14 vertices");
    return verdict(alexander_duality_check(c.g, c.g.vertices()), {{"ground", c.g.vertices()}});
}

const std::map<std::string, std::function<Outcome(Context&)>>& check_table() {
    static const std::map<std::string, std::function<Outcome(Context&)>> t{
        {"unimodularity", check_unimodularity}, {"energy", check_energy},
        {"inertia", check_inertia},             {"hydrogen", check_hydrogen},
        {"dual-product", check_dual_product},   {"gauss-bonnet", check_gauss_bonnet},
        {"poincare-hopf", check_poincare_hopf}, {"dehn-sommerville", check_dehn_sommerville},
        {"euler-poincare", check_euler_poincare}, {"mckean-singer", check_mckean_singer},
        {"wu", check_wu},                       {"boundary", check_boundary},
        {"sard", check_sard},                   {"lefschetz", check_lefschetz},
        {"kuenneth", check_kuenneth},           {"zeta-symmetry", check_zeta},
        {"trees", check_trees},                 {"stokes", check_stokes},
        {"alexander", check_alexander}};
    return t;
}

}  // namespace

VerificationReport run_verify(const Complex& g, const std::string& id, const std::vector<std::string>& suite,
                              const VerifyOptions& opt) {
    VerificationReport rep;
    rep.complex_id = id;
    Context ctx{g, opt, std::nullopt};
    for (const std::string& name : suite) {
        CheckResult r;
        r.name = name;
        const auto start = Clock::now();
        try {
            Outcome o = check_table().at(name)(ctx);
            r.status = std::move(o.status);
            r.witness = std::move(o.witness);
        } catch (const ResourceError& e) {
            r.status = std::string("skipped:resource cap: ") + e.what();
        } catch (const std::exception& e) {
            r.status = "fail";
            r.witness = {{"error", e.what()}};
        }
        r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

namespace {

Json meta_block(double wall_ms) {
    const std::time_t now = std::time(nullptr);
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    return {{"tool", "simplexion"}, {"version", "1.0.0"}, {"timestamp", ts.str()}, {"wall_ms", wall_ms}};
}

}  // namespace

Json report_to_json(const VerificationReport& r, bool meta) {
    Json j;
    j["complex"] = r.complex_id;
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        Json e{{"name", c.name}, {"status", c.status}, {"witness", c.witness}};
        if (meta) e["wall_ms"] = c.wall_ms;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["passed"] = r.passed();
    return j;
}

Json random_statistics(int n, double p, std::int64_t trials, std::uint64_t seed) {
    if (n < 1 || n > 10) throw InvalidInput("random: n must be between 1 and 10");
    if (!(p >= 0 && p <= 1)) throw InvalidInput("random: p must lie in [0, 1]");
    if (trials < 1) throw InvalidInput("random: trials must be positive");
    double s[3] = {0, 0, 0}, s2[3] = {0, 0, 0};
    for (std::int64_t t = 0; t < trials; ++t) {
        const Complex g = erdos_renyi(RandomModel{n, p, substream_seed(seed, static_cast<std::uint64_t>(t))});
        const double v[3] = {inductive_dimension(g).convert_to<double>(), static_cast<double>(euler_characteristic(g)),
                             wu_characteristic(g, 2).convert_to<double>()};
        for (int k = 0; k < 3; ++k) {
            s[k] += v[k];
            s2[k] += v[k] * v[k];
        }
    }
    auto stat = [&](int k) {
        const double mean = s[k] / trials;
        const double var = trials > 1 ? std::max(0.0, (s2[k] - trials * mean * mean) / (trials - 1)) : 0.0;
        return std::pair<double, double>(mean, std::sqrt(var / trials));
    };
    const double formula[2] = {poly_eval(expected_dimension(n), p), poly_eval(expected_euler(n), p)};
    Json j{{"n", n}, {"p", p}, {"trials", trials}, {"seed", seed}};
    const char* names[3] = {"dim", "chi", "wu"};
    for (int k = 0; k < 3; ++k) {
        const auto [mean, se] = stat(k);
        Json e{{"mean", mean}, {"stderr", se}};
        if (k < 2) {
            e["formula"] = formula[k];
            const double diff = mean - formula[k];
            e["z"] = se > 0 ? diff / se : (std::abs(diff) < 1e-12 ? 0.0 : INFINITY);
        }
        j[names[k]] = std::move(e);
    }
    j["formula_dim"] = poly_to_string(expected_dimension(n));
    j["formula_chi"] = poly_to_string(expected_euler(n));
    return j;
}

namespace {

struct Common {
    std::string input, output, format = "json";
    bool no_meta = false;
    int cap = 0;
    std::uint64_t seed = 1;
    std::int64_t trials = 20;
};

void add_common(CLI::App* app, Common& c, bool io = true) {
    if (io) {
        app->add_option("-i,--input", c.input, "input JSON file");
        app->add_option("-o,--output", c.output, "output file (default: stdout)");
    }
    app->add_flag("--no-meta", c.no_meta, "omit timestamps and timings");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
    app->add_option("--cap-simplices", c.cap, "exact-size cap (default: SIMPLEXION_CAP or 3000)");
    app->add_option("--seed", c.seed, "random seed");
    app->add_option("--trials", c.trials, "Monte Carlo trials");
}

Complex load_complex(const std::string& path) {
    if (path.empty()) throw InvalidInput("missing --input");
    const Json j = read_json_file(path);
    if (j.is_object() && !j.contains("facets") && j.contains("edges")) return whitney(graph_from_json(j));
    return complex_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) out << text;
    else write_text_file(c.output, text);
}

Json complex_summary(const Complex& g) {
    return {{"f_vector", f_vector(g)}, {"euler", euler_characteristic(g)}, {"dim", g.dim()}, {"size", g.size()}};
}

std::string table(const VerificationReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "check" << "status\n";
    for (const CheckResult& c : r.checks) os << std::setw(18) << c.name << c.status << "\n";
    os << (r.passed() ? "all applicable checks passed\n" : "some checks failed\n");
    return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on finite abstract simplicial complexes"};
    app.require_subcommand(1);
    Common c;

    auto* gen = app.add_subcommand("generate", "write a named complex as JSON");
    std::string kind, input2, name;
    int n = 0, dim = 0, levels = 1;
    double p = 0.5;
    gen->add_option("kind", kind, "complex family")
        ->required()
        ->check(CLI::IsMember({"complete", "cycle", "path", "points", "cross-polytope", "icosahedron", "whitney",
                               "erdos-renyi", "join", "union", "product", "refine"}));
    gen->add_option("--n", n, "number of vertices");
    gen->add_option("--dim", dim, "dimension");
    gen->add_option("--p", p, "edge probability");
    gen->add_option("--input2", input2, "second complex for join, union and product");
    gen->add_option("--name", name, "name stored in the output");
    gen->add_option("--levels", levels, "refinement levels for kind refine");
    add_common(gen, c);

    auto* ref = app.add_subcommand("refine", "Barycentric refinement");
    ref->add_option("--levels", levels, "number of refinements");
    add_common(ref, c);

    auto* ana = app.add_subcommand("analyze", "invariants of a complex");
    bool want_betti = false, want_wu = false, want_inter = false, want_curv = false, want_morse = false;
    std::vector<std::string> level_args;
    std::string function_file;
    ana->add_flag("--betti", want_betti, "Betti numbers and polynomials");
    ana->add_flag("--wu", want_wu, "Wu characteristic");
    ana->add_flag("--interaction", want_inter, "interaction cohomology");
    ana->add_flag("--curvature", want_curv, "Levitt curvature");
    ana->add_flag("--morse", want_morse, "Morse analysis (of --function, else the build order)");
    ana->add_option("--level", level_args, "level surface: FUNCTION.json VALUE")->expected(2);
    ana->add_option("--function", function_file, "vertex function file for --morse");
    add_common(ana, c);

    auto* ver = app.add_subcommand("verify", "run theorem checks");
    std::string suite = "all";
    ver->add_option("--suite", suite, "comma separated checks or 'all'");
    add_common(ver, c);

    auto* spe = app.add_subcommand("spectra", "numeric spectra");
    std::string op = "connection", csv;
    bool want_zeta = false;
    int limit_levels = -1;
    spe->add_option("--operator", op, "operator")->check(CLI::IsMember({"connection", "hodge", "kirchhoff"}));
    spe->add_flag("--zeta", want_zeta, "zeta values on a small grid");
    spe->add_option("--limit-levels", limit_levels, "Barycentric limit experiment depth");
    spe->add_option("--csv", csv, "write index,eigenvalue rows to this file");
    add_common(spe, c);

    auto* ran = app.add_subcommand("random", "Monte Carlo statistics of random Whitney complexes");
    ran->add_option("--n", n, "vertices (at most 10)")->required();
    ran->add_option("--p", p, "edge probability")->required();
    add_common(ran, c, false);
    ran->add_option("-o,--output", c.output, "output file (default: stdout)");

    auto* mat = app.add_subcommand("matrix", "export an exact matrix");
    std::string mkind = "connection";
    mat->add_option("--kind", mkind, "matrix")
        ->check(CLI::IsMember({"connection", "dual", "green", "hodge", "dirac", "kirchhoff", "incidence"}));
    add_common(mat, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }
    const int cap = c.cap > 0 ? c.cap : default_cap();
    const auto start = Clock::now();
    auto elapsed = [&] { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); };

    try {
        if (gen->parsed()) {
            Complex g;
            if (kind == "complete") g = complete(n);
            else if (kind == "cycle") g = cycle(n);
            else if (kind == "path") g = path(n);
            else if (kind == "points") g = points(n);
            else if (kind == "cross-polytope") g = cross_polytope(dim);
            else if (kind == "icosahedron") g = icosahedron();
            else if (kind == "whitney") g = whitney(graph_from_json(read_json_file(c.input)));
            else if (kind == "erdos-renyi") g = erdos_renyi(RandomModel{n, p, c.seed});
            else if (kind == "refine") {
                g = load_complex(c.input);
                for (int l = 0; l < levels; ++l) g = barycentric(g, c.cap > 0 ? c.cap : kDefaultRefineCap);
            } else {
                const Complex a = load_complex(c.input), b = load_complex(input2);
                if (kind == "join") g = join(a, b).complex;
                else if (kind == "union") g = disjoint_union(a, b).complex;
                else g = product_complex(ring_product(a, b));
            }
            emit(c, dump(complex_to_json(g, name)), out);
            return kExitPass;
        }
        if (ref->parsed()) {
            Complex g = load_complex(c.input);
            for (int l = 0; l < levels; ++l) g = barycentric(g, c.cap > 0 ? c.cap : kDefaultRefineCap);
            emit(c, dump(complex_to_json(g)), out);
            return kExitPass;
        }
        if (ana->parsed()) {
            const Complex g = load_complex(c.input);
            if (g.size() > cap) throw ResourceError("complex has " + std::to_string(g.size()) + " simplices (cap " +
                                                    std::to_string(cap) + ")");
            Json j = complex_summary(g);
            j["generating_function"] = generating_function(g);
            j["flag"] = is_flag(g);
            j["inductive_dimension"] = inductive_dimension(g).str();
            if (want_betti) {
                const CohomologyReport r = betti(g);
                j["betti"] = {{"betti", r.betti}, {"poincare_poly", r.poincare_poly}, {"euler_poly", r.euler_poly}};
            }
            if (want_wu) j["wu"] = wu_characteristic(g, 2).str();
            if (want_inter) {
                const InteractionReport r = interaction_cohomology(g);
                j["interaction"] = {{"betti", r.cohomology.betti},
                                    {"poincare_poly", r.cohomology.poincare_poly},
                                    {"euler_poly", r.cohomology.euler_poly},
                                    {"alternating_sum", r.cohomology.alternating_sum()},
                                    {"dd_zero", r.dd_zero}};
            }
            if (want_curv) {
                const Carrier car = carrier(g);
                Json ks = Json::array();
                Rational s = 0;
                for (const Rational& k : levitt_curvatures(car.graph)) {
                    ks.push_back(k.str());
                    s += k;
                }
                j["curvature"] = {{"carrier", car.on_skeleton ? "skeleton" : "refinement"}, {"levitt", ks}, {"sum", s.str()}};
            }
            if (want_morse) {
                MorseReport m;
                if (!function_file.empty()) {
                    const auto f = function_from_json(read_json_file(function_file));
                    VertexFunction fv;
                    for (int v : g.vertices()) {
                        if (!f.count(v)) throw InvalidInput("function misses vertex " + std::to_string(v));
                        fv.push_back(f.at(v));
                    }
                    m = morse_analysis(skeleton(g), fv);
                } else {
                    VertexFunction fv(g.size());
                    for (int i = 0; i < g.size(); ++i) fv[i] = i;
                    m = morse_analysis(g, fv);
                }
                j["morse"] = {{"is_morse", m.is_morse}, {"first_failure", m.first_failure}, {"index", m.index},
                              {"counts", m.counts},     {"betti", m.betti},                 {"weak", m.weak_holds},
                              {"strong", m.strong_holds}};
            }
            if (!level_args.empty()) {
                const auto f = function_from_json(read_json_file(level_args[0]));
                double value = 0;
                try {
                    value = std::stod(level_args[1]);
                } catch (const std::exception&) {
                    throw InvalidInput("level value must be a number");
                }
                const Complex s = level_surface(g, f, value);
                j["level"] = {{"value", value}, {"f_vector", f_vector(s)}, {"euler", euler_characteristic(s)},
                              {"is_d_graph", g.dim() >= 1 && is_d_graph(carrier(s).graph, g.dim() - 1)}};
            }
            if (!c.no_meta) j["meta"] = meta_block(elapsed());
            emit(c, dump(j), out);
            return kExitPass;
        }
        if (ver->parsed()) {
            const Complex g = load_complex(c.input);
            const auto names = parse_suite(suite);
            const VerificationReport r = run_verify(g, c.input, names, VerifyOptions{cap, c.seed, c.trials});
            if (c.format == "table") {
                emit(c, table(r), out);
            } else {
                Json j = report_to_json(r, !c.no_meta);
                if (!c.no_meta) j["meta"] = meta_block(elapsed());
                emit(c, dump(j), out);
            }
            return r.passed() ? kExitPass : kExitFail;
        }
        if (spe->parsed()) {
            const Complex g = load_complex(c.input);
            if (g.size() > cap) throw ResourceError("complex has " + std::to_string(g.size()) + " simplices (cap " +
                                                    std::to_string(cap) + ")");
            const Spectrum s = spectrum(g, parse_operator(op));
            std::ostringstream rows;
            rows << "index,eigenvalue\n" << std::setprecision(17);
            for (std::size_t i = 0; i < s.values.size(); ++i) rows << i << "," << s.values[i] << "\n";
            if (!csv.empty()) write_text_file(csv, rows.str());
            if (c.format == "csv") {
                emit(c, rows.str(), out);
                return kExitPass;
            }
            Json j{{"operator", op}, {"eigenvalues", s.values}};
            if (want_zeta) {
                const auto ev = spectrum(g, OperatorKind::connection).values;
                std::vector<Complex128> grid{{-1, 0}, {0, 0}, {1, 0}, {2, 0}, {0, 0.5}, {0, -0.5},
                                             {0, 1},  {0, -1}, {0, 2}, {0, -2}};
                const auto z = zeta_from_spectrum(ev, grid);
                Json zs = Json::array();
                for (std::size_t i = 0; i < grid.size(); ++i)
                    zs.push_back({{"s", {grid[i].real(), grid[i].imag()}}, {"value", {z[i].real(), z[i].imag()}}});
                j["zeta"] = std::move(zs);
            }
            if (limit_levels >= 0) {
                const LimitReport r = barycentric_limit_experiment(g, limit_levels, cap);
                Json ls = Json::array();
                for (const LimitLevel& l : r.levels) {
                    Json e{{"level", l.level},       {"vertices", l.vertices}, {"distance", l.distance},
                           {"max_gap", l.max_gap}, {"kirchhoff", l.kirchhoff}};
                    if (l.connection_min_abs >= 0) e["connection_min_abs"] = l.connection_min_abs;
                    ls.push_back(std::move(e));
                }
                j["limit"] = {{"dimension", r.dimension}, {"monotone", r.monotone()}, {"levels", ls}};
            }
            if (!c.no_meta) j["meta"] = meta_block(elapsed());
            emit(c, dump(j), out);
            return kExitPass;
        }
        if (ran->parsed()) {
            const std::int64_t trials = ran->count("--trials") ? c.trials : 10000;
            Json j = random_statistics(n, p, trials, c.seed);
            if (!c.no_meta) j["meta"] = meta_block(elapsed());
            emit(c, dump(j), out);
            return kExitPass;
        }
        if (mat->parsed()) {
            const Complex g = load_complex(c.input);
            if (g.size() > cap) throw ResourceError("complex has " + std::to_string(g.size()) + " simplices (cap " +
                                                    std::to_string(cap) + ")");
            ExactMatrix m;
            if (mkind == "connection") m = connection_matrix(g);
            else if (mkind == "dual") m = dual_connection_matrix(g);
            else if (mkind == "green") m = green_inverse(g);
            else if (mkind == "hodge") m = hodge_laplacian(g);
            else if (mkind == "dirac") m = dirac(g);
            else if (mkind == "kirchhoff") m = kirchhoff(skeleton(g));
            else m = full_derivative(g);
            emit(c, dump(matrix_to_json(m)), out);
            return kExitPass;
        }
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotFound& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace simplexion
