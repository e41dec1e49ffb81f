#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gdeform/symmetry/builtin.hpp"

using namespace gdeform;

namespace {

std::vector<std::size_t> dims_of(const std::vector<Representation>& reps)
{
    std::vector<std::size_t> d;
    for (const auto& r : reps) d.push_back(r.dim());
    std::sort(d.begin(), d.end());
    return d;
}

Representation rep_with_label(const std::vector<Representation>& reps, const std::string& label)
{
    for (const auto& r : reps)
        if (r.label() == label) return r;
    throw std::runtime_error("no representation " + label);
}

// The permutation of {0..n-1} carried by a permutation matrix.
std::vector<std::size_t> as_permutation(const CMatrix& m)
{
    std::vector<std::size_t> p(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j).is_one()) p[j] = i;
    return p;
}

}  // namespace

TEST(Group, SymmetricGroupOfDegreeThree)
{
    auto g = symmetric_group(3);
    EXPECT_EQ(g->order(), 6u);
    EXPECT_EQ(g->num_classes(), 3u);
    std::size_t total = 0;
    for (std::size_t c = 0; c < g->num_classes(); ++c) total += g->class_size(c);
    EXPECT_EQ(total, 6u);
}

TEST(Group, ClosureInverseAndIdentity)
{
    auto g = symmetric_group(4);
    EXPECT_EQ(g->order(), 24u);
    EXPECT_EQ(g->num_classes(), 5u);
    EXPECT_EQ(g->element(FiniteGroup::identity()), CMatrix::identity(4));
    for (std::size_t i = 0; i < g->order(); ++i) {
        EXPECT_EQ(g->element(i) * g->element(g->inverse(i)), CMatrix::identity(4));
        for (std::size_t j = 0; j < g->order(); j += 5)
            EXPECT_TRUE(g->contains(g->element(i) * g->element(j)));
    }
}

TEST(Group, HeisenbergOrderAndClasses)
{
    auto h = heisenberg(3);
    EXPECT_EQ(h.group->order(), 27u);
    // 9 one-dimensional characters and 2 Schrödinger representations: 11 classes.
    EXPECT_EQ(h.group->num_classes(), 9u + 2u);
}

TEST(Group, CliffordSymmetryGroupHasOrder54)
{
    auto s3 = symmetric_group(3);
    std::vector<CMatrix> gens = s3->generators();
    CMatrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = CycScalar::zeta(3);
    d(2, 2) = CycScalar::zeta(3, 2);
    gens.push_back(d);
    auto g = FiniteGroup::enumerate(gens, 3);
    EXPECT_EQ(g->order(), 54u);
}

TEST(Group, CapAndInvertibilityErrors)
{
    auto s4 = symmetric_group(4);
    EXPECT_THROW(FiniteGroup::enumerate(s4->generators(), 4, 10), CapacityError);
    CMatrix singular(2, 2);
    singular(0, 0) = 1;
    EXPECT_THROW(FiniteGroup::enumerate({singular}, 2), ValidationError);
}

TEST(Group, TrivialGroupHasOneElement)
{
    auto g = FiniteGroup::enumerate({}, 3);
    EXPECT_EQ(g->order(), 1u);
    auto v = Representation::natural(g);
    EXPECT_EQ(v.dim(), 3u);
    EXPECT_EQ(hom_space(v, v).size(), 9u);
}

TEST(RepOps, WedgeAndSymOfPermutationRep)
{
    auto g = symmetric_group(3);
    auto v = permutation_rep(g);
    auto w = v.wedge2();
    EXPECT_EQ(w.dim(), 3u);
    EXPECT_EQ(v.sym2().dim(), 6u);
    // matrices and characters agree for the derived reps
    for (const auto& r : {w, v.sym2(), tensor(v, v), v.dual(), direct_sum(v, w)}) {
        r.verify_homomorphism();
        for (std::size_t c = 0; c < g->num_classes(); ++c)
            EXPECT_EQ(r.element_image(g->class_representative(c)).trace(), r.character().values[c]) << r.label();
    }
}

TEST(RepOps, WeightBackendTensorAndWedge)
{
    WeightGroup t2{2};
    auto v = Representation::from_weights(t2, {{1, 0}, {0, 1}}, "V");
    auto vv = tensor(v, v);
    std::vector<Weight> expected{{2, 0}, {1, 1}, {1, 1}, {0, 2}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(vv.character().weights, expected);
    EXPECT_EQ(v.wedge2().character().weights, (std::vector<Weight>{{1, 1}}));
    EXPECT_EQ(v.sym2().dim(), 3u);
    EXPECT_EQ(v.dual().character().weights, (std::vector<Weight>{{-1, 0}, {0, -1}}));
}

TEST(RepOps, DualCharacterIsComplexConjugate)
{
    auto h = heisenberg(3);
    auto v = h.natural;
    auto vd = v.dual();
    for (std::size_t i = 0; i < h.group->order(); ++i) {
        CycScalar tr = v.element_image(i).trace();
        EXPECT_EQ(vd.element_image(i).trace(), tr.galois(-1)) << "element " << i;
    }
}

TEST(RepOps, MixedBackendsRejected)
{
    auto v = permutation_rep(symmetric_group(2));
    auto w = Representation::from_weights(WeightGroup{1}, {{1}, {2}}, "W");
    EXPECT_THROW(tensor(v, w), ValidationError);
    EXPECT_THROW(hom_space(v, w), ValidationError);
}

TEST(HomSpace, PermutationRepEndomorphisms)
{
    auto g = symmetric_group(3);
    auto v = permutation_rep(g);
    EXPECT_EQ(hom_space(v, v).size(), 2u);
    for (const auto& f : hom_space(v, v))
        for (const auto& m : g->generators()) EXPECT_EQ(f * m, m * f);
}

TEST(HomSpace, InvariantsOfTensorSquareCountOrbitsOnPairs)
{
    auto g = symmetric_group(3);
    auto v = permutation_rep(g);
    // oracle: number of orbits of S3 on pairs (i, j)
    std::set<std::set<std::pair<std::size_t, std::size_t>>> orbits;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::set<std::pair<std::size_t, std::size_t>> orb;
            for (std::size_t e = 0; e < g->order(); ++e) {
                auto p = as_permutation(g->element(e));
                orb.emplace(p[i], p[j]);
            }
            orbits.insert(orb);
        }
    EXPECT_EQ(hom_space(Representation::trivial(g), tensor(v, v)).size(), orbits.size());
    // diagonal pairs and off-diagonal pairs
    EXPECT_EQ(orbits.size(), 2u);
}

TEST(HomSpace, WeightBackendMatching)
{
    WeightGroup t2{2};
    auto v = Representation::from_weights(t2, {{1, 0}, {0, 1}}, "V");
    auto chi = Representation::from_weights(t2, {{1, 1}}, "chi_e1+e2");
    EXPECT_EQ(hom_space(chi, tensor(v, v)).size(), 2u);
    EXPECT_EQ(multiplicity(chi, tensor(v, v)), 2);
}

TEST(Multiplicity, SymmetricGroupExamples)
{
    auto s4 = symmetric_group_irreps(4);
    auto triv = rep_with_label(s4.irreps, "[4]");
    auto std_rep = rep_with_label(s4.irreps, "[3,1]");
    EXPECT_EQ(multiplicity(triv, s4.natural), 1);
    EXPECT_EQ(multiplicity(std_rep, tensor(std_rep, std_rep)), 1);
    // S (x) S = S∧S + T + S + W with W simple and distinct from S, S∧S
    auto ss = tensor(std_rep, std_rep);
    long total = 0;
    for (const auto& s : s4.irreps) total += multiplicity(s, ss) * static_cast<long>(s.dim());
    EXPECT_EQ(total, 9);
    EXPECT_EQ(multiplicity(rep_with_label(s4.irreps, "[2,2]"), ss), 1);
    EXPECT_EQ(multiplicity(rep_with_label(s4.irreps, "[2,1,1]"), ss), 1);
    EXPECT_EQ(multiplicity(rep_with_label(s4.irreps, "[2,1,1]"), std_rep.wedge2()), 1);
}

TEST(Multiplicity, SchrodingerInTensorSquare)
{
    auto h = heisenberg(3);
    auto vv = tensor(h.natural, h.natural);
    // oracle: character inner product, computed here element by element
    CycScalar s(0);
    for (std::size_t e = 0; e < h.group->order(); ++e)
        s += h.natural.element_image(e).trace().galois(-1) * vv.element_image(e).trace();
    s /= CycScalar(27);
    long total = 0;
    for (const auto& simple : h.irreps) total += multiplicity(simple, vv) * static_cast<long>(simple.dim());
    EXPECT_EQ(total, 9);
    // The defining rep is schrodinger_1 up to isomorphism.
    EXPECT_EQ(multiplicity(h.irreps[9], h.natural), 1);
    EXPECT_EQ(CycScalar(multiplicity(h.irreps[9], vv)), s);
    long schrod = multiplicity(h.irreps[9], vv) + multiplicity(h.irreps[10], vv);
    EXPECT_EQ(schrod, 3);
}

TEST(Multiplicity, AdditiveAndRejectsReducible)
{
    auto s3 = symmetric_group_irreps(3);
    auto v = s3.natural;
    for (const auto& s : s3.irreps) {
        EXPECT_EQ(multiplicity(s, direct_sum(v, tensor(v, v))), multiplicity(s, v) + multiplicity(s, tensor(v, v)));
        EXPECT_EQ(multiplicity(s, tensor(s, Representation::trivial(s3.group))), 1);
    }
    EXPECT_THROW(multiplicity(v, v), ValidationError);
}

TEST(Builtins, SymmetricGroupIrrepDimensions)
{
    EXPECT_EQ(dims_of(symmetric_group_irreps(3).irreps), (std::vector<std::size_t>{1, 1, 2}));
    for (int n = 1; n <= 5; ++n) {
        auto f = symmetric_group_irreps(n);
        std::vector<std::size_t> hook;
        for (const auto& p : partitions(n)) hook.push_back(hook_length_dimension(p));
        std::sort(hook.begin(), hook.end());
        EXPECT_EQ(dims_of(f.irreps), hook) << "n=" << n;
        EXPECT_EQ(check_irrep_list(f.group, f.irreps), "") << "n=" << n;
    }
    EXPECT_EQ(dims_of(symmetric_group_irreps(4).irreps), (std::vector<std::size_t>{1, 1, 2, 3, 3}));
}

TEST(Builtins, SymmetricGroupSix)
{
    auto f = symmetric_group_irreps(6, false);
    EXPECT_EQ(f.group->order(), 720u);
    EXPECT_EQ(f.irreps.size(), 11u);
    EXPECT_EQ(check_irrep_list(f.group, f.irreps), "");
}

TEST(Builtins, HeisenbergIrreps)
{
    auto h = heisenberg(3);
    ASSERT_EQ(h.irreps.size(), 11u);
    std::size_t ones = 0, threes = 0;
    for (const auto& r : h.irreps) (r.dim() == 1 ? ones : threes) += 1;
    EXPECT_EQ(ones, 9u);
    EXPECT_EQ(threes, 2u);
    EXPECT_EQ(check_irrep_list(h.group, h.irreps), "");
    auto h2 = heisenberg(2);
    EXPECT_EQ(h2.group->order(), 8u);
    EXPECT_EQ(check_irrep_list(h2.group, h2.irreps), "");
}

TEST(Builtins, DihedralIrreps)
{
    for (int n : {3, 4, 5, 6}) {
        auto d = dihedral(n);
        EXPECT_EQ(d.group->order(), static_cast<std::size_t>(2 * n));
        EXPECT_EQ(check_irrep_list(d.group, d.irreps), "") << "n=" << n;
    }
}

TEST(Builtins, IncompleteListIsReported)
{
    auto f = symmetric_group_irreps(3);
    f.irreps.pop_back();
    EXPECT_NE(check_irrep_list(f.group, f.irreps), "");
}

TEST(WeightBackend, TensorPowerMultiplicityCountsCompositions)
{
    WeightGroup t2{2};
    auto v = Representation::from_weights(t2, {{1, 0}, {0, 1}, {1, 1}}, "V");
    for (std::size_t k = 1; k <= 4; ++k) {
        auto vk = v.tensor_power(k);
        // oracle: enumerate all words of length k
        std::map<Weight, long> count;
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= 3;
        for (std::size_t w = 0; w < total; ++w) {
            Weight s{0, 0};
            std::size_t x = w;
            for (std::size_t i = 0; i < k; ++i, x /= 3) s = s + v.weights()[x % 3];
            ++count[s];
        }
        for (const auto& [wt, c] : count)
            EXPECT_EQ(multiplicity(Representation::from_weights(t2, {wt}, "chi"), vk), c);
    }
}
