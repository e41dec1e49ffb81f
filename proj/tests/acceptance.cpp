// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gdeform/algebra/onedim.hpp"
#include "gdeform/casestudy/casestudy.hpp"
#include "gdeform/deform/ore.hpp"

using namespace fixtures;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (!pass) detail << "; ";
            else detail.str("");
            pass = false;
            detail << what;
        }
    }
};

std::vector<std::size_t> binomial_series(std::size_t vars, std::size_t top) { return polynomial_hilbert(vars, top); }

// Nonzero rationals p/q with |p| <= 9, 1 <= q <= 5.
CycScalar random_nonzero(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
    const long p = num(rng) * (sign(rng) ? 1 : -1);
    return CycScalar(Rational(p, den(rng)));
}

// 1. The degree-2 deformation space of C[V] for S_{n+1}.
void ledger_p2(Outcome& o)
{
    for (int n : {2, 3, 4}) {
        auto fam = symmetric_group_irreps(n + 1);
        Ledger l = build_ledger(snp1_polynomial(n, fam.group, 2), fam.irreps, 2);
        auto emb = embedding_space(l, {2});
        std::multiset<std::string> f;
        for (const auto& x : emb.factors) f.insert(x.to_string());
        o.require(f == std::multiset<std::string>{"Grass(1,1)", "Grass(1,3)"} && emb.dim == 2,
                  "n=" + std::to_string(n) + " gives " + emb.to_string());
    }
    if (o.pass) o.detail << "Grass(1,1)xGrass(1,3), dim 2, for n = 2, 3, 4";
}

// 2. Hilbert functions on the skew and differential strata.
void strata_hilbert(Outcome& o)
{
    std::mt19937 rng(11);
    std::size_t runs = 0;
    for (int n : {2, 3}) {
        auto fam = symmetric_group_irreps(n + 1);
        const auto expect = binomial_series(n + 1, 5);
        for (int s = 0; s < 5; ++s) {
            const CycScalar a = random_nonzero(rng), c = random_nonzero(rng);
            auto hs = hilbert_function(snp1_skew(n, a, fam.group, 5), 5);
            auto hd = hilbert_function(snp1_differential(n, c, fam.group, 5), 5);
            o.require(hs == expect, "n=" + std::to_string(n) + " skew a=" + a.to_string());
            o.require(hd == expect, "n=" + std::to_string(n) + " differential c=" + c.to_string());
            runs += 2;
        }
    }
    if (o.pass) o.detail << runs << " presentations match the coefficients of 1/(1-t)^{n+1} to degree 5";
}

// 3. Point scheme for n = 2: determinant and successor.
void point_scheme_n2(Outcome& o)
{
    Presentation p = free_on({"x", "y", "t"});
    p.add_relation("x*y - y*x");
    p.add_relation("x*t - t*x - y^2");
    p.add_relation("y*t - t*y - x^2");
    LinearFormMatrix m(p);
    auto v = point_variety(m);
    const auto& vars = m.vars();
    auto x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);
    const MultiPoly target = y * y * y - x * x * x;
    o.require(v.determinant && *v.determinant == target,
              "determinant " + (v.determinant ? v.determinant->to_string() : std::string("missing")));
    o.require(v.equations.size() == 1 && v.equations[0] == target.normalized(), "normalized equation differs");

    // The variety is [0:0:1] together with the lines [1:d:r], d^3 = 1.  Over
    // Q(zeta_3)(r) the successor of [1:d:r] is [1:d:r + s_d] with s_d constant.
    const CycScalar w = CycScalar::zeta(3);
    std::vector<std::string> shifts;
    for (const auto& d : {CycScalar(1), w, w * w}) {
        std::vector<FracScalar> pt = {FracScalar(CycScalar(1)), FracScalar(d), FracScalar::parameter()};
        auto ker = kernel_basis(m.at(pt));
        if (ker.size() != 1 || ker[0][0].is_zero()) {
            o.require(false, "successor undefined on the line y = " + d.to_string() + " x");
            continue;
        }
        FracScalar inv = ker[0][0].inverse();
        for (auto& c : ker[0]) c *= inv;
        FracScalar diff = ker[0][2] - FracScalar::parameter();
        const bool constant = diff.is_polynomial() && diff.numerator().degree() <= 0;
        o.require(ker[0][1] == FracScalar(d) && constant && !diff.is_zero(),
                  "line y = " + d.to_string() + " x is not translated");
        if (constant && !diff.is_zero()) shifts.push_back((diff.numerator()[0] / diff.denominator()[0]).to_string());
    }
    o.require(!shifts.empty() && shifts[0] == "1", "diagonal shift is not 1");
    auto top = ProjPoint::make(CVec{CycScalar(0), CycScalar(0), CycScalar(1)});
    o.require(classify_orbit(m, top).kind == OrbitKind::fixed, "[0:0:1] is not fixed");
    if (o.pass)
        o.detail << "det = " << target.to_string() << ", normalized " << v.equations[0].to_string()
                 << "; shifts on x=y, y=wx, y=w^2x: " << shifts[0] << ", " << shifts[1] << ", " << shifts[2]
                 << "; only fixed point [0:0:1]";
}

// 4. Line counts and pointwise-fixed lines.
void line_counts(Outcome& o)
{
    const std::size_t lines[] = {3, 7, 15}, fixed[] = {0, 3, 0};
    std::ostringstream got;
    for (int n : {2, 3, 4}) {
        auto s = snp1_line_structure(n);
        got << (n > 2 ? ", " : "") << "n=" << n << ": " << s.lines.size() << " lines, " << s.fixed_count << " fixed";
        o.require(s.lines.size() == lines[n - 2], "n=" + std::to_string(n) + " line count");
        o.require(s.fixed_count == fixed[n - 2], "n=" + std::to_string(n) + " fixed count");
        o.require(s.all_on_variety, "n=" + std::to_string(n) + " a line leaves the variety");
    }
    if (o.pass) o.detail << got.str();
}

// All maximal minors of the linear-form matrix, zero ones included.
std::vector<MultiPoly> raw_minors(const LinearFormMatrix& m)
{
    auto sym = m.symbolic();
    std::vector<MultiPoly> out;
    for (const auto& rs : index_subsets(m.rows(), m.cols())) {
        Matrix<MultiPoly> sub(m.cols(), m.cols(), MultiPoly(m.vars()));
        for (std::size_t i = 0; i < m.cols(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) sub(i, j) = sym(rs[i], j);
        out.push_back(poly_determinant(sub, m.vars()));
    }
    return out;
}

std::vector<MultiPoly> three_cubics(const std::vector<std::string>& vars)
{
    auto v = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
    auto v10 = v(1), v01 = v(2), v11 = v(3);
    return {v11 * (v10 * v10 - v01 * v01), v10 * (v01 * v01 - v11 * v11), v01 * (v10 * v10 - v11 * v11)};
}

// 5. n = 3: lines on all minors, sampled points on the cubics.
void locus_n3(Outcome& o)
{
    LinearFormMatrix m(snp1_differential(3, CycScalar(1)));
    auto minors = raw_minors(m);
    o.require(minors.size() == 15, std::to_string(minors.size()) + " maximal minors");
    for (const auto& l : snp1_line_structure(3).lines)
        o.require(detail::line_satisfies(minors, 4, l.base, l.direction), "a candidate line misses a minor");

    LinearFormMatrix m3(snp1_differential_klein(CycScalar(1)));
    auto v3 = point_variety(m3);
    auto sample = sample_curve_points(v3, 4, 50);
    auto cub = three_cubics(m3.vars());
    std::size_t bad = 0;
    for (const auto& pt : sample.points)
        for (const auto& f : cub)
            if (!f.eval(pt.coords).is_zero()) {
                ++bad;
                break;
            }
    o.require(sample.points.size() >= 50, "only " + std::to_string(sample.points.size()) + " points sampled");
    o.require(bad == 0, std::to_string(bad) + " counterexamples");
    if (o.pass)
        o.detail << "7 lines on all " << minors.size() << " minors; " << sample.points.size()
                 << " sampled points, 0 counterexamples";
}

// 6. Degenerate points of the Clifford family.
void clifford_scan(Outcome& o)
{
    auto scan = clifford_degree3_scan();
    const long generic = 27 - scan.generic_rank;
    o.require(generic == 10, "generic dim A_3 = " + std::to_string(generic));
    o.require(scan.unresolved_factors.empty(), "unresolved factors in the scan");
    std::string drops;
    for (const auto& p : scan.drops) drops += (drops.empty() ? "" : " ") + p.to_string();
    o.require(same_point_set(scan.drops, clifford_expected_degenerate()), "drops at " + drops);
    if (o.pass) o.detail << "generic dim A_3 = 10; drops exactly at " << drops;
}

// 7. Twists of C[V] by equivariant automorphisms.
void twist_bound(Outcome& o)
{
    auto fam = symmetric_group_irreps(3);
    struct Case {
        std::string name;
        Ledger ledger;
    };
    std::vector<Case> cases;
    cases.push_back({"S_3", build_ledger(snp1_polynomial(2, fam.group), fam.irreps, 2)});
    cases.push_back({"T_2", build_ledger(quantum_plane(CycScalar(1), CycScalar(1)), quantum_simples(2, 5), 2)});
    std::ostringstream got;
    for (const auto& c : cases) {
        auto rep = twist_family_check(c.ledger, 10);
        o.require(rep.samples.size() == 10, c.name + ": " + std::to_string(rep.samples.size()) + " samples");
        o.require(rep.hilbert_preserved, c.name + ": a twist changes the Hilbert function");
        o.require(rep.points_distinct, c.name + ": " + rep.message);
        o.require(rep.family_dim == rep.expected_dim, c.name + ": family dim " + std::to_string(rep.family_dim) +
                                                          " vs " + std::to_string(rep.expected_dim));
        got << (got.str().empty() ? "" : "; ") << c.name << " family dim " << rep.family_dim << " = sum e^2 - 1";
    }
    if (o.pass) o.detail << "10 twists each, Hilbert unchanged to degree 5, distinct points; " << got.str();
}

// 8. sigma-derivations.
void ore_solver(Outcome& o)
{
    for (int n : {2, 3}) {
        Presentation full = snp1_polynomial(n);
        Representation s = snp1_standard(full);
        std::vector<std::string> names(full.names().begin(), full.names().begin() + n);
        Presentation base(s, names);
        add_commutators(base, n);
        const auto trivial = Representation::trivial(s.group());

        auto none = sigma_derivation_solve(base, CycScalar(3) * CMatrix::identity(n), trivial);
        o.require(none.empty(), "n=" + std::to_string(n) + " sigma=3id has solutions");
        if (n == 3) {
            std::vector<CMatrix> det;
            for (const auto& g : full.space().generator_images()) {
                CMatrix d(1, 1);
                d(0, 0) = determinant(g);
                det.push_back(d);
            }
            auto sign = Representation::from_matrices(s.group(), det, 1, "sign");
            auto none2 = sigma_derivation_solve(base, CycScalar(-2) * CMatrix::identity(n), sign);
            o.require(none2.empty(), "n=3 sigma=-2id, sign has solutions");
        }

        auto sol = sigma_derivation_solve(base, CMatrix::identity(n), trivial);
        std::vector<CVec> flat;
        for (const auto& d : sol) {
            CVec f;
            for (const auto& x : d) f.insert(f.end(), x.begin(), x.end());
            flat.push_back(f);
        }
        CVec closed;
        for (int i = 0; i < n; ++i) {
            CVec d = lift_commutative(snp1_delta(n, i, n), n);
            closed.insert(closed.end(), d.begin(), d.end());
        }
        o.require(!flat.empty() && span_contains(flat, {closed}, n * n * n),
                  "n=" + std::to_string(n) + " the closed-form delta is not a solution");
    }
    if (o.pass)
        o.detail << "no delta for (n=2, 3id, trivial), (n=3, 3id, trivial), (n=3, -2id, sign); "
                    "closed-form delta solves sigma = id for n = 2, 3";
}

// 9. Degree characters along the quantum-plane family.
void quantum_characters(Outcome& o)
{
    std::mt19937 rng(5);
    const auto simples = quantum_simples(2, 5);
    const CycScalar w = CycScalar::zeta(3);
    std::vector<std::pair<CycScalar, CycScalar>> pts = {{CycScalar(1), w}, {w * w, CycScalar(Rational(2, 3))}};
    while (pts.size() < 10) pts.emplace_back(random_nonzero(rng), random_nonzero(rng));
    for (const auto& [a, b] : pts) {
        Presentation p = quantum_plane(a, b, 5);
        DegreeTower tower(p, 5);
        for (std::size_t k = 0; k <= 5; ++k) {
            json expect = json::object();
            for (std::size_t i = 0; i <= k; ++i)
                expect["chi" + weight_to_string({static_cast<long>(k - i), static_cast<long>(i)})] = 1;
            json got = character_json(degree_character(p, k, &tower), simples);
            o.require(got == expect, "[" + a.to_string() + ":" + b.to_string() + "] degree " + std::to_string(k) +
                                         ": " + got.dump());
        }
    }
    if (o.pass) o.detail << "10 points [a:b], degrees 0..5 all equal sum_i chi(k-i,i)";
}

// 10. The Heisenberg twist changes the relation character.
void heisenberg_flip(Outcome& o)
{
    auto h2 = heisenberg(2);
    Presentation comm(h2.natural, {"x", "y"});
    comm.add_relation("x*y - y*x");
    auto tw = twist(comm, h2.natural.generator_images()[1]);
    auto rc = relation_character(comm, 2), rt = relation_character(tw, 2);
    o.require(rc.values == heisenberg_character(h2, 1, 1).character().values, "C[x,y] relations are not chi_1,1");
    o.require(rt.values == heisenberg_character(h2, 0, 1).character().values, "twist relations are not chi_0,1");
    o.require(rc.values != rt.values, "characters agree");
    o.require(hilbert_function(tw, 5) == hilbert_function(comm, 5), "twist changes the Hilbert function");
    if (o.pass) o.detail << "chi_1,1 for C[x,y], chi_0,1 for the e_2 twist; not isomorphic as graded G-modules";
}

// 11. One-dimensional loci in the monomial coordinates.
void onedim(Outcome& o)
{
    {
        Presentation p = snp1_differential_xyt(CycScalar(1));
        auto vars = p.names();
        auto a = MultiPoly::variable(vars, 0), b = MultiPoly::variable(vars, 1);
        o.require(compare_graded_ideals(onedim_locus(p), {a * a, b * b}, vars, 3).equal, "n=2 differs from (a^2, b^2)");
    }
    {
        Presentation p = snp1_differential_klein(CycScalar(1));
        auto vars = p.names();
        auto b = MultiPoly::variable(vars, 1), c = MultiPoly::variable(vars, 2), d = MultiPoly::variable(vars, 3);
        o.require(compare_graded_ideals(onedim_locus(p), {b * c, b * d, c * d}, vars, 3).equal,
                  "n=3 differs from (bc, bd, cd)");
    }
    if (o.pass) o.detail << "n=2 matches (a^2, b^2) and n=3 matches (bc, bd, cd) to degree 3";
}

// Words of length k in d letters avoiding every forbidden adjacent pair.
std::size_t count_words(std::size_t d, std::size_t k, const std::set<std::pair<std::size_t, std::size_t>>& bad)
{
    std::size_t total = 0;
    std::vector<std::size_t> w(k, 0);
    std::function<void(std::size_t)> go = [&](std::size_t pos) {
        if (pos == k) {
            ++total;
            return;
        }
        for (std::size_t x = 0; x < d; ++x) {
            if (pos > 0 && bad.count({w[pos - 1], x})) continue;
            w[pos] = x;
            go(pos + 1);
        }
    };
    go(0);
    return total;
}

// 12. Monomial presentations against word enumeration.
void monomial_oracle(Outcome& o)
{
    std::mt19937 rng(97);
    std::ostringstream got;
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t d = 1 + rng() % 3;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i));
        Presentation p = free_on(names);
        std::set<std::pair<std::size_t, std::size_t>> bad;
        const std::size_t nrel = 1 + rng() % (d * d);
        while (bad.size() < nrel) bad.insert({rng() % d, rng() % d});
        for (auto [i, j] : bad) {
            CVec v(d * d);
            v[i * d + j] = 1;
            p.add_relation(2, v);
        }
        auto h = hilbert_function(p, 5);
        std::vector<std::size_t> oracle;
        for (std::size_t k = 0; k <= 5; ++k) oracle.push_back(count_words(d, k, bad));
        o.require(h == oracle, "trial " + std::to_string(trial) + " differs from word enumeration");
        got << (trial ? " " : "") << d << "gen/" << nrel << "rel";
    }
    if (o.pass) o.detail << "5 presentations (" << got.str() << ") match word enumeration to degree 5";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"S_{n+1} deformation space", ledger_p2},
        {"Hilbert functions on the strata", strata_hilbert},
        {"point scheme n=2", point_scheme_n2},
        {"line counts", line_counts},
        {"n=3 locus equivalence", locus_n3},
        {"Clifford degeneracy", clifford_scan},
        {"twist invariance and bound", twist_bound},
        {"Ore solver", ore_solver},
        {"character constancy", quantum_characters},
        {"H_2 twist character flip", heisenberg_flip},
        {"one-dimensional loci", onedim},
        {"oracle equivalence", monomial_oracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
                  << o.detail.str() << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
