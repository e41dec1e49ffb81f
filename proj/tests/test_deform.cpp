#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gdeform/deform/homfamily.hpp"
#include "gdeform/deform/ledger.hpp"
#include "gdeform/deform/ore.hpp"
#include "gdeform/deform/twist.hpp"

using namespace gdeform;
using namespace fixtures;

namespace {

std::size_t index_of(const std::vector<Representation>& simples, const std::string& label)
{
    for (std::size_t i = 0; i < simples.size(); ++i)
        if (simples[i].label() == label) return i;
    throw std::runtime_error("no simple " + label);
}

std::vector<Representation> quantum_simples(long top) { return models::quantum_simples(2, top); }

Presentation quantum_plane(long a, long b) { return models::quantum_plane(CycScalar(a), CycScalar(b)); }

Presentation snp1_family(int n, long a, long b, long c, GroupPtr g = nullptr)
{
    return models::snp1_family(n, CycScalar(a), CycScalar(b), CycScalar(c), std::move(g));
}

}  // namespace

TEST(Ledger, SymmetricGroupPolynomialRingIsP2)
{
    for (int n : {2, 3, 4}) {
        auto fam = symmetric_group_irreps(n + 1, false);
        std::vector<std::string> names;
        for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
        Presentation p(permutation_rep(fam.group), names);
        add_commutators(p, n + 1);
        Ledger l = build_ledger(p, fam.irreps, 2);
        auto sp = embedding_space(l, {2});
        EXPECT_EQ(sp.dim, 2) << "n=" << n;
        ASSERT_EQ(sp.factors.size(), 2u);
        std::vector<std::pair<long, long>> shapes;
        for (const auto& f : sp.factors) shapes.emplace_back(f.f, f.a);
        std::sort(shapes.begin(), shapes.end());
        EXPECT_EQ(shapes, (std::vector<std::pair<long, long>>{{1, 1}, {1, 3}})) << "n=" << n;
        // trivial: a = 2, f = 0
        std::string triv = partition_label({n + 1});
        const auto& t = l.entry(2, index_of(fam.irreps, triv));
        EXPECT_EQ(t.a, 2);
        EXPECT_EQ(t.f, 0);
    }
}

TEST(Ledger, S3EntriesMatchDecomposition)
{
    auto fam = symmetric_group_irreps(3);
    Presentation p = Presentation(permutation_rep(fam.group), {"a", "b", "c"});
    add_commutators(p, 3);
    Ledger l = build_ledger(p, fam.irreps, 3);
    const auto& sgn = l.entry(2, index_of(fam.irreps, "[1,1,1]"));
    const auto& std_ = l.entry(2, index_of(fam.irreps, "[2,1]"));
    EXPECT_EQ(sgn.a, 1);
    EXPECT_EQ(sgn.f, 1);
    EXPECT_EQ(std_.a, 3);
    EXPECT_EQ(std_.f, 1);
    for (std::size_t k = 0; k <= 3; ++k) {
        long total = 0, ideal = 0;
        for (const auto& e : l.degree(k).entries) {
            total += e.a * static_cast<long>(fam.irreps[e.simple].dim());
            ideal += e.f * static_cast<long>(fam.irreps[e.simple].dim());
            EXPECT_LE(0, e.e);
            EXPECT_LE(e.e, e.a);
        }
        EXPECT_EQ(total, static_cast<long>(ipow(3, k)));
        EXPECT_EQ(ideal, static_cast<long>(l.degree(k).ideal_dim));
    }
    // Schur bases have the ledger sizes.
    EXPECT_EQ(l.schur_basis(2, index_of(fam.irreps, "[2,1]")).size(), 3u);
}

TEST(Ledger, QuantumPlaneIsP1)
{
    Ledger l = build_ledger(quantum_plane(1, 1), quantum_simples(2), 2);
    auto sp = embedding_space(l, {2});
    ASSERT_EQ(sp.factors.size(), 1u);
    EXPECT_EQ(sp.factors[0].label, "chi(1,1)");
    EXPECT_EQ(sp.factors[0].a, 2);
    EXPECT_EQ(sp.factors[0].f, 1);
    EXPECT_EQ(sp.dim, 1);
}

TEST(Ledger, FreeAlgebraHasNoRelations)
{
    auto fam = symmetric_group_irreps(3);
    Presentation p(permutation_rep(fam.group), {"a", "b", "c"});
    Ledger l = build_ledger(p, fam.irreps, 3);
    for (std::size_t k = 0; k <= 3; ++k)
        for (const auto& e : l.degree(k).entries) EXPECT_EQ(e.f, 0);
    EXPECT_EQ(embedding_space(l, {2, 3}).dim, 0);
    EXPECT_EQ(embedding_space(l, {2, 3}).to_string(), "point");
}

TEST(Ledger, MissingSimpleReportsDeficit)
{
    auto fam = symmetric_group_irreps(3);
    Presentation p(permutation_rep(fam.group), {"a", "b", "c"});
    add_commutators(p, 3);
    std::vector<Representation> partial{fam.irreps[0], fam.irreps[1]};
    try {
        build_ledger(p, partial, 2);
        FAIL() << "expected a ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("deficit"), std::string::npos);
    }
}

TEST(Ledger, RejectsIsomorphicSimples)
{
    auto fam = symmetric_group_irreps(3);
    Presentation p(permutation_rep(fam.group), {"a", "b", "c"});
    std::vector<Representation> dup{fam.irreps[0], fam.irreps[0], fam.irreps[1], fam.irreps[2]};
    EXPECT_THROW(build_ledger(p, dup, 2), ValidationError);
}

TEST(DeformPoint, QuantumPlanePointsAndRelations)
{
    Ledger l = build_ledger(quantum_plane(1, 1), quantum_simples(2), 2);
    const std::size_t mid = index_of(l.simples(), "chi(1,1)");
    for (auto [a, b] : {std::pair<long, long>{2, 3}, {1, 0}, {0, 1}, {5, -1}}) {
        auto pt = canonical_point_of_relations(l, quantum_plane(a, b), 2);
        ASSERT_EQ(pt.blocks[2].size(), 1u);
        const CMatrix& c = pt.blocks[2][mid];
        // Row proportional to (a, -b) in the basis x1x2, x2x1.
        EXPECT_EQ(c(0, 0) * CycScalar(-b), c(0, 1) * CycScalar(a)) << a << ":" << b;
        auto back = point_to_presentation(l, pt);
        ASSERT_EQ(back.relations(2).size(), 1u);
        EXPECT_TRUE(span_contains(back.relations(2), quantum_plane(a, b).relations(2), 4));
        EXPECT_EQ(canonical_point_of_relations(l, back, 2), pt);
    }
}

TEST(DeformPoint, RoundTripRecoversWedge)
{
    auto fam = symmetric_group_irreps(3);
    Presentation p(permutation_rep(fam.group), {"a", "b", "c"});
    add_commutators(p, 3);
    Ledger l = build_ledger(p, fam.irreps, 3);
    auto pt = canonical_point(l, p, 2);
    EXPECT_TRUE(point_matches_ledger(l, pt));
    auto back = point_to_presentation(l, pt);
    EXPECT_EQ(span_of(back.relations(2), 9).canonical_basis(), span_of(p.relations(2), 9).canonical_basis());
    EXPECT_EQ(canonical_point(l, back, 2), pt);
}

TEST(DeformPoint, SymmetricGroupFamilyIsTwoDimensional)
{
    auto fam = symmetric_group_irreps(3, true);
    Presentation base = snp1_polynomial(2, fam.group);
    Ledger l = build_ledger(base, fam.irreps, 2);
    std::vector<DeformPoint> seen;
    for (auto [a, b, c] : {std::tuple<long, long, long>{1, -1, 0}, {1, -1, 1}, {1, 2, 0}, {1, 2, 3}, {0, 1, 0}, {0, 0, 1}}) {
        Presentation q = snp1_family(2, a, b, c, fam.group);
        EXPECT_TRUE(is_g_stable(q).stable) << a << ":" << b << ":" << c;
        auto pt = canonical_point_of_relations(l, q, 2);
        EXPECT_TRUE(point_matches_ledger(l, pt));
        auto back = point_to_presentation(l, pt);
        EXPECT_EQ(span_of(back.relations(2), 9).canonical_basis(), span_of(q.relations(2), 9).canonical_basis());
        for (const auto& s : seen) EXPECT_NE(s, pt);
        seen.push_back(pt);
    }
    // [1:-1:0] is C[V] itself.
    EXPECT_EQ(seen[0], canonical_point_of_relations(l, base, 2));
}

TEST(DeformPoint, RankDeficientBlockIsRejected)
{
    Ledger l = build_ledger(quantum_plane(1, 1), quantum_simples(2), 2);
    DeformPoint pt;
    pt.blocks[2][index_of(l.simples(), "chi(1,1)")] = CMatrix(1, 2);
    EXPECT_THROW(point_to_presentation(l, pt), ValidationError);
}

TEST(DeformPoint, PluckerOfLine)
{
    CMatrix c(2, 3);
    c(0, 0) = 1;
    c(0, 2) = 2;
    c(1, 1) = 1;
    c(1, 2) = 3;
    auto p = plucker(c);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0], CycScalar(1));
    EXPECT_EQ(p[1], CycScalar(3));
    EXPECT_EQ(p[2], CycScalar(-2));
}

TEST(VkMembership, FullIdealSpansAreClosed)
{
    Presentation p = clifford(CycScalar(1), CycScalar(2));
    DegreeTower t(p, 4);
    std::map<std::size_t, std::vector<CVec>> spaces;
    for (std::size_t k = 2; k <= 4; ++k) spaces[k] = t.ideal_basis(k);
    EXPECT_TRUE(vk_membership(3, spaces).member);
    EXPECT_TRUE(vk_membership(3, {{2, p.relations(2)}}).member);
}

TEST(VkMembership, CliffordPointAtInfinityIsFlagged)
{
    // Generic member of the family: ideal dimension 17 in degree 3.
    DegreeTower generic(clifford(CycScalar(1), CycScalar(2)), 3);
    const std::size_t generic_dim = 27 - generic.dim(3);
    EXPECT_EQ(generic_dim, 17u);
    // [0:1]: relations x^2, y^2, z^2 and P_3 spanned by their shifts only.
    Presentation special = clifford(CycScalar(0), CycScalar(1));
    auto shifts = ideal_degree_span_naive(special, 3);
    EXPECT_EQ(shifts.size(), 15u);
    auto cert = vk_membership(3, {{2, special.relations(2)}, {3, shifts}}, {{2, 3}, {3, generic_dim}});
    EXPECT_FALSE(cert.member);
    EXPECT_EQ(cert.degree, 3u);
    EXPECT_EQ(cert.kind, "dimension");
    // A P_3 missing some shifts violates containment.
    std::vector<CVec> partial(shifts.begin(), shifts.begin() + 10);
    auto cert2 = vk_membership(3, {{2, special.relations(2)}, {3, partial}});
    EXPECT_FALSE(cert2.member);
    EXPECT_EQ(cert2.kind, "containment");
}

TEST(HomFamily, CliffordAnticommutatorsGiveP1)
{
    Presentation p = clifford(CycScalar(1), CycScalar(0));
    EXPECT_EQ(p.space().group()->order(), 54u);
    auto f = hom_family(p.space(), 2, p.relations(2));
    EXPECT_EQ(f.maps.size(), 2u);
    EXPECT_EQ(f.end_dim, 1);
    EXPECT_TRUE(f.projective);
    EXPECT_EQ(f.family_dim, 1);
    // The coordinates (1, 0) and (0, 1) of the basis maps give G-stable spaces.
    for (std::size_t j = 0; j < 2; ++j) {
        CVec c(2);
        c[j] = 1;
        auto img = hom_family_image(f, c);
        Presentation q(p.space(), p.names());
        for (const auto& r : img) q.add_relation(2, r);
        EXPECT_TRUE(is_g_stable(q).stable);
    }
}

TEST(HomFamily, SignInsideS3TensorSquareIsAPoint)
{
    auto fam = symmetric_group_irreps(3);
    Presentation p(permutation_rep(fam.group), {"a", "b", "c"});
    // The sign copy in V⊗V.
    auto [deg, v] = p.parse_relation("a*b - b*a + b*c - c*b + c*a - a*c");
    auto f = hom_family(p.space(), deg, {v});
    EXPECT_EQ(f.maps.size(), 1u);
    EXPECT_EQ(f.end_dim, 1);
    EXPECT_EQ(f.description, "point");
}

TEST(HomFamily, TrivialGroupIsReportedRaw)
{
    Presentation p = commutative({"a", "b", "c"});
    auto f = hom_family(p.space(), 2, p.relations(2));
    EXPECT_EQ(f.maps.size(), 27u);  // 3 x 9
    EXPECT_EQ(f.end_dim, 9);
    EXPECT_FALSE(f.projective);
}

TEST(HomFamily, UnstableSubspaceIsRejected)
{
    Presentation p = clifford(CycScalar(1), CycScalar(0));
    auto [deg, v] = p.parse_relation("x*x");
    EXPECT_THROW(hom_family(p.space(), deg, {v}), ValidationError);
}

TEST(Normalizer, SwapExchangesQuantumPlaneCoordinates)
{
    Ledger l = build_ledger(quantum_plane(1, 1), quantum_simples(2), 2);
    CMatrix s(2, 2);
    s(0, 1) = 1;
    s(1, 0) = 1;
    for (auto [a, b] : {std::pair<long, long>{2, 3}, {1, 0}, {4, -7}}) {
        auto pt = canonical_point_of_relations(l, quantum_plane(a, b), 2);
        auto moved = normalizer_action(s, l, pt);
        EXPECT_EQ(moved, canonical_point_of_relations(l, quantum_plane(b, a), 2)) << a << ":" << b;
    }
}

TEST(Normalizer, GroupElementsAndScalarsActTrivially)
{
    auto fam = symmetric_group_irreps(3);
    Presentation base = snp1_polynomial(2, fam.group);
    Ledger l = build_ledger(base, fam.irreps, 2);
    auto pt = canonical_point_of_relations(l, snp1_family(2, 1, 2, 3, fam.group), 2);
    for (const auto& g : base.space().generator_images()) EXPECT_EQ(normalizer_action(g, l, pt), pt);
    EXPECT_EQ(normalizer_action(CycScalar(5) * CMatrix::identity(3), l, pt), pt);
}

TEST(Normalizer, NonNormalizingMatrixIsRejected)
{
    Presentation p = clifford(CycScalar(1), CycScalar(2));
    CMatrix h = CMatrix::identity(3);
    h(0, 1) = 1;
    EXPECT_FALSE(normalizes(h, p.space()));
    EXPECT_THROW(normalizer_action(h, p), ValidationError);
    CMatrix mix(2, 2);
    mix(0, 0) = 1;
    mix(0, 1) = 1;
    mix(1, 1) = 1;
    EXPECT_FALSE(normalizes(mix, quantum_space()));
}

TEST(Normalizer, PreservesHilbertAndMultiplicities)
{
    Presentation p = clifford(CycScalar(1), CycScalar(3));
    // A scalar multiple of a group element normalizes the group.
    CMatrix h = CycScalar::zeta(3) * p.space().generator_images()[0];
    ASSERT_TRUE(normalizes(h, p.space()));
    auto q = normalizer_action(h, p);
    EXPECT_EQ(hilbert_function(q, 4), hilbert_function(p, 4));
    auto rp = degree_reports(p, 3, true), rq = degree_reports(q, 3, true);
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(*rp[k].character, *rq[k].character);
}

TEST(Twist, IdentityTwistIsTrivial)
{
    Presentation p = clifford(CycScalar(1), CycScalar(2));
    auto t = twist(p, CMatrix::identity(3));
    EXPECT_EQ(span_of(t.relations(2), 9).canonical_basis(), span_of(p.relations(2), 9).canonical_basis());
}

TEST(Twist, ScalingVGivesSkewRelations)
{
    const int n = 2;
    Presentation p = snp1_polynomial(n);
    CMatrix beta = CMatrix::identity(3);
    beta(2, 2) = 5;
    auto t = twist(p, beta);
    Presentation expect(p.space(), p.names());
    add_commutators(expect, n);
    expect.add_relation("y1*v - 5*v*y1");
    expect.add_relation("y2*v - 5*v*y2");
    EXPECT_EQ(span_of(t.relations(2), 9).canonical_basis(), span_of(expect.relations(2), 9).canonical_basis());
    EXPECT_EQ(hilbert_function(t, 5), hilbert_function(p, 5));
    EXPECT_TRUE(is_g_stable(t).stable);
}

TEST(Twist, HeisenbergTwistAnticommutes)
{
    auto h2 = heisenberg(2);
    Presentation comm(h2.natural, {"x", "y"});
    comm.add_relation("x*y - y*x");
    CMatrix e2 = h2.natural.generator_images()[1];
    auto t = twist(comm, e2);
    auto [deg, anti] = comm.parse_relation("x*y + y*x");
    EXPECT_TRUE(span_contains(t.relations(2), {anti}, 4));
    EXPECT_EQ(relation_character(comm, 2).values, heisenberg_character(h2, 1, 1).character().values);
    EXPECT_EQ(relation_character(t, 2).values, heisenberg_character(h2, 0, 1).character().values);
    EXPECT_EQ(hilbert_function(t, 5), hilbert_function(comm, 5));
}

TEST(Twist, RandomAutomorphismsPreserveHilbert)
{
    Presentation p = snp1_polynomial(3);
    auto end = hom_space(p.space(), p.space());
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> u(-4, 4);
    int tried = 0;
    for (int s = 0; s < 40 && tried < 10; ++s) {
        CMatrix beta(4, 4);
        for (const auto& b : end) beta = beta + CycScalar(u(rng)) * b;
        if (determinant(beta).is_zero()) continue;
        ++tried;
        EXPECT_EQ(hilbert_function(twist(p, beta), 4), hilbert_function(p, 4));
    }
    EXPECT_EQ(tried, 10);
}

TEST(Twist, NonAutomorphismIsRejected)
{
    Presentation p = clifford(CycScalar(1), CycScalar(2));
    CMatrix h = CMatrix::identity(3);
    h(0, 0) = 2;
    EXPECT_THROW(twist(p, h), ValidationError);
}

TEST(TwistFamily, SimpleSpaceGivesPoint)
{
    auto fam = symmetric_group_irreps(3);
    auto s = fam.irreps[index_of(fam.irreps, "[2,1]")];
    Presentation p(s, {"a", "b"});
    add_commutators(p, 2);
    Ledger l = build_ledger(p, fam.irreps, 2);
    auto rep = twist_family_check(l, 3);
    EXPECT_EQ(rep.expected_dim, 0);
    EXPECT_EQ(rep.family_dim, 0);
    EXPECT_TRUE(rep.hilbert_preserved);
    for (const auto& x : rep.samples) EXPECT_EQ(x.point, rep.samples[0].point);
}

TEST(TwistFamily, PermutationRepGivesLine)
{
    auto fam = symmetric_group_irreps(3);
    Ledger l = build_ledger(snp1_polynomial(2, fam.group), fam.irreps, 2);
    auto rep = twist_family_check(l, 6);
    EXPECT_EQ(rep.expected_dim, 1);
    EXPECT_EQ(rep.family_dim, 1);
    EXPECT_TRUE(rep.hilbert_preserved);
    EXPECT_TRUE(rep.points_distinct) << rep.message;
    EXPECT_EQ(rep.samples.size(), 6u);
    // The twists land on the skew stratum: C = 0 in the point's S block means
    // the relation y_i v - a v y_i.
    for (const auto& s : rep.samples) {
        auto q = point_to_presentation(l, s.point);
        CycScalar a = s.alpha(2, 2) / s.alpha(0, 0);
        Presentation expect(q.space(), q.names());
        add_commutators(expect, 2);
        CVec r(9);
        r[0 * 3 + 2] = 1;
        r[2 * 3 + 0] = -a;
        expect.add_relation(2, r);
        EXPECT_TRUE(span_contains(q.relations(2), expect.relations(2), 9));
    }
}

TEST(TwistFamily, TorusTwistsExhaustLine)
{
    Ledger l = build_ledger(quantum_plane(1, 1), quantum_simples(2), 2);
    auto rep = twist_family_check(l, 5);
    EXPECT_EQ(rep.expected_dim, 1);
    EXPECT_EQ(rep.family_dim, 1);
    EXPECT_TRUE(rep.points_distinct) << rep.message;
    EXPECT_TRUE(rep.hilbert_preserved);
}

TEST(Ore, TrivialExtensionIsPolynomialRing)
{
    auto fam = symmetric_group_irreps(3);
    Presentation base(permutation_rep(fam.group), {"a", "b", "c"});
    add_commutators(base, 3);
    OreData o{base, CMatrix::identity(3), std::vector<CVec>(3, CVec(9)), Representation::trivial(fam.group), "t"};
    auto p = ore_extension(o);
    EXPECT_EQ(hilbert_function(p, 4), (std::vector<std::size_t>{1, 4, 10, 20, 35}));
    EXPECT_TRUE(is_g_stable(p).stable);
}

TEST(Ore, DifferentialStratum)
{
    for (int n : {2, 3}) {
        Presentation full = snp1_polynomial(n);
        Representation s = snp1_standard(full);
        std::vector<std::string> names(full.names().begin(), full.names().begin() + n);
        Presentation base(s, names);
        add_commutators(base, n);
        std::vector<CVec> delta;
        for (int i = 0; i < n; ++i) {
            CVec d = snp1_delta(n, i, n);
            for (auto& x : d) x *= CycScalar(3);
            delta.push_back(d);
        }
        OreData o{base, CMatrix::identity(n), delta, Representation::trivial(s.group()), "v"};
        auto check = check_ore_data(o);
        ASSERT_TRUE(check.ok) << check.failure;
        auto p = ore_extension(o);
        std::vector<std::size_t> expect;
        for (long k = 0; k <= 4; ++k) {
            long b = 1;
            for (long i = 1; i <= n; ++i) b = b * (k + i) / i;
            expect.push_back(static_cast<std::size_t>(b));
        }
        EXPECT_EQ(hilbert_function(p, 4), expect) << "n=" << n;
        // v y_i - y_i v - 3 δ(y_i): the family point [1:-1:3] up to sign.
        Presentation fam = snp1_family(n, 1, -1, 3);
        const std::size_t w = (n + 1) * (n + 1);
        EXPECT_EQ(span_of(p.relations(2), w).canonical_basis(), span_of(fam.relations(2), w).canonical_basis());
    }
}

TEST(Ore, SkewStratum)
{
    const int n = 3;
    Presentation full = snp1_polynomial(n);
    Representation s = snp1_standard(full);
    Presentation base(s, {"y1", "y2", "y3"});
    add_commutators(base, n);
    OreData o{base, CycScalar(4) * CMatrix::identity(n), std::vector<CVec>(n, CVec(n * n)),
              Representation::trivial(s.group()), "v"};
    auto p = ore_extension(o);
    EXPECT_EQ(hilbert_function(p, 4), (std::vector<std::size_t>{1, 4, 10, 20, 35}));
    auto [deg, r] = p.parse_relation("v*y1 - 4*y1*v");
    EXPECT_TRUE(span_contains(p.relations(2), {r}, 16));
}

TEST(Ore, BrokenDataIsReported)
{
    Presentation full = snp1_polynomial(2);
    Representation s = snp1_standard(full);
    Presentation base(s, {"y1", "y2"});
    add_commutators(base, 2);
    // δ(y_1) = y_1^2, δ(y_2) = 0 is not equivariant.
    std::vector<CVec> delta(2, CVec(4));
    delta[0][0] = 1;
    OreData o{base, CMatrix::identity(2), delta, Representation::trivial(s.group()), "v"};
    auto c = check_ore_data(o);
    EXPECT_FALSE(c.ok);
    EXPECT_NE(c.failure.find("equivariance"), std::string::npos);
    EXPECT_THROW(ore_extension(o), ValidationError);
    // σ not equivariant
    CMatrix sig = CMatrix::identity(2);
    sig(0, 0) = 2;
    OreData o2{base, sig, std::vector<CVec>(2, CVec(4)), Representation::trivial(s.group()), "v"};
    EXPECT_FALSE(check_ore_data(o2).ok);
}

TEST(SigmaDerivation, NoEigenvalueOneGivesZero)
{
    // σ = a·id on C[S] with S having no trivial constituent.
    for (int n : {2, 3}) {
        Presentation full = snp1_polynomial(n);
        Representation s = snp1_standard(full);
        std::vector<std::string> names(full.names().begin(), full.names().begin() + n);
        Presentation base(s, names);
        add_commutators(base, n);
        auto sol = sigma_derivation_solve(base, CycScalar(3) * CMatrix::identity(n), Representation::trivial(s.group()));
        EXPECT_TRUE(sol.empty()) << "n=" << n;
    }
    // Torus: σ = diag(2, 3), χ a weight not occurring in V.
    Presentation q = quantum_plane(1, 1);
    CMatrix sig(2, 2);
    sig(0, 0) = 2;
    sig(1, 1) = 3;
    auto chi = Representation::from_weights(WeightGroup{2}, {{0, 0}}, "triv");
    EXPECT_TRUE(sigma_derivation_solve(q, sig, chi).empty());
}

TEST(SigmaDerivation, ClosedFormDerivationIsAdmissible)
{
    for (int n : {2, 3}) {
        Presentation full = snp1_polynomial(n);
        Representation s = snp1_standard(full);
        std::vector<std::string> names(full.names().begin(), full.names().begin() + n);
        Presentation base(s, names);
        add_commutators(base, n);
        auto sol = sigma_derivation_solve(base, CMatrix::identity(n), Representation::trivial(s.group()));
        ASSERT_FALSE(sol.empty());
        const std::size_t w = n * n;
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
        EXPECT_TRUE(span_contains(flat, {closed}, n * w)) << "n=" << n;
        EXPECT_EQ(sol.size(), 1u) << "n=" << n;
        // Each solution passes the Ore checks.
        for (const auto& d : sol) {
            OreData o{base, CMatrix::identity(n), d, Representation::trivial(s.group()), "v"};
            EXPECT_TRUE(check_ore_data(o).ok);
        }
    }
}
