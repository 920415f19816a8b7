#include "gradstar/errors.hpp"
#include "gradstar/utalg.hpp"

#include "doctest.h"

#include <random>

using namespace gradstar;

namespace {

UTMatrix e(int m, int i, int j) { return UTMatrix::elementary(m, i, j); }

ElementaryGrading grading(const std::string& group, const std::vector<std::vector<std::int64_t>>& tuple)
{
    const auto g = AbelianGroup::parse(group);
    std::vector<GroupElement> t;
    for (const auto& c : tuple)
        t.push_back(g.element(c));
    return ElementaryGrading(g, t);
}

UTMatrix random_matrix(int m, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-4, 4);
    UTMatrix a(m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            a.set(i, j, Rational(d(rng), 1 + (d(rng) + 4) % 3));
    return a;
}

} // namespace

TEST_CASE("matrix_mul on elementary matrices")
{
    CHECK(matrix_mul(e(3, 1, 2), e(3, 2, 3)) == e(3, 1, 3));
    CHECK(matrix_mul(e(3, 1, 2), e(3, 1, 2)).is_zero());
    CHECK(matrix_mul(e(3, 1, 1), e(3, 1, 2)) == e(3, 1, 2));
    CHECK_THROWS_AS(matrix_mul(e(2, 1, 2), e(3, 1, 2)), StructuralError);
}

TEST_CASE("lower entries are rejected")
{
    UTMatrix a(3);
    CHECK_THROWS(a.set(2, 1, 1));
}

TEST_CASE("apply_involution")
{
    const Involution refl(InvolutionKind::reflection, 3);
    CHECK(apply_involution(refl, e(3, 1, 2)) == e(3, 2, 3));
    CHECK(apply_involution(refl, e(3, 1, 3)) == e(3, 1, 3));
    const Involution symp(InvolutionKind::symplectic, 2);
    CHECK(apply_involution(symp, e(2, 1, 2)) == e(2, 1, 2) * Rational(-1));
    CHECK(apply_involution(symp, e(2, 1, 1)) == e(2, 2, 2));
    CHECK_THROWS_AS(Involution(InvolutionKind::symplectic, 3), UnsupportedInvolution);
}

TEST_CASE("involutions are involutive anti-automorphisms")
{
    std::mt19937 rng(7);
    for (int m = 1; m <= 6; ++m) {
        std::vector<Involution> invs{Involution(InvolutionKind::reflection, m)};
        if (m % 2 == 0)
            invs.emplace_back(InvolutionKind::symplectic, m);
        for (const auto& inv : invs)
            for (int t = 0; t < 20; ++t) {
                const auto a = random_matrix(m, rng), b = random_matrix(m, rng);
                CHECK(inv.apply(inv.apply(a)) == a);
                CHECK(inv.apply(a * b) == inv.apply(b) * inv.apply(a));
                CHECK(inv.apply(a + b) == inv.apply(a) + inv.apply(b));
            }
    }
}

TEST_CASE("finest_grading tuples")
{
    const auto g3 = finest_grading(3);
    const auto& z = g3.group();
    CHECK(z.moduli() == std::vector<std::int64_t>{0});
    CHECK(g3.tuple() == std::vector<GroupElement>{z.element({1}), z.zero(), z.element({-1})});

    const auto g4 = finest_grading(4);
    const auto& z2 = g4.group();
    CHECK(g4.tuple() ==
          std::vector<GroupElement>{z2.element({1, 0}), z2.element({0, 1}), z2.zero(), z2.element({-1, 1})});

    const auto g1 = finest_grading(1);
    CHECK(g1.group().is_trivial());
    CHECK(g1.support() == std::vector<GroupElement>{g1.group().zero()});
}

TEST_CASE("admits_mirror_condition")
{
    CHECK(admits_mirror_condition(finest_grading(3)));
    CHECK(admits_mirror_condition(grading("Z_2", {{0}, {1}, {0}})));
    CHECK(admits_mirror_condition(grading("Z", {{0}, {1}})));
    CHECK_FALSE(admits_mirror_condition(grading("Z", {{0}, {1}, {1}})));
}

TEST_CASE("is_graded_involution")
{
    for (int m = 1; m <= 8; ++m)
        CHECK(is_graded_involution(finest_grading(m), Involution(InvolutionKind::reflection, m)));
    for (int r = 1; r <= 4; ++r)
        CHECK(is_graded_involution(finest_grading(2 * r), Involution(InvolutionKind::symplectic, 2 * r)));
    CHECK_FALSE(is_graded_involution(grading("Z", {{0}, {1}, {1}}), Involution(InvolutionKind::reflection, 3)));
    CHECK_THROWS_AS(GradedStarAlgebra(grading("Z", {{0}, {1}, {1}}), Involution(InvolutionKind::reflection, 3)),
                    PreconditionError);
}

TEST_CASE("mirror condition agrees with reflection compatibility on random tuples")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-2, 2);
    const auto groups = {"Z", "Z^2", "Z_3", "Z x Z_2"};
    for (const auto* name : groups) {
        const auto g = AbelianGroup::parse(name);
        for (int m = 1; m <= 5; ++m)
            for (int t = 0; t < 60; ++t) {
                std::vector<GroupElement> tuple;
                for (int i = 0; i < m; ++i) {
                    std::vector<std::int64_t> c;
                    for (std::size_t f = 0; f < g.factors(); ++f)
                        c.push_back(d(rng));
                    tuple.push_back(g.element(c));
                }
                const ElementaryGrading gr(g, tuple);
                CHECK(admits_mirror_condition(gr) ==
                      is_graded_involution(gr, Involution(InvolutionKind::reflection, m)));
            }
    }
}

TEST_CASE("homogeneous_basis")
{
    const auto g3 = finest_grading(3);
    const auto& z = g3.group();
    CHECK(homogeneous_basis(g3, z.element({1})) == std::vector<UTMatrix>{e(3, 1, 2), e(3, 2, 3)});
    CHECK(homogeneous_basis(g3, z.element({2})) == std::vector<UTMatrix>{e(3, 1, 3)});
    CHECK(homogeneous_basis(g3, z.element({5})).empty());
    for (int m = 1; m <= 6; ++m) {
        const auto g = finest_grading(m);
        const auto neutral = homogeneous_basis(g, g.group().zero());
        CHECK(neutral.size() == static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i)
            CHECK(neutral[static_cast<std::size_t>(i - 1)] == e(m, i, i));
    }
    const auto z2 = grading("Z_2", {{0}, {1}, {0}});
    CHECK(homogeneous_basis(z2, z2.group().zero()).size() == 4);
}

TEST_CASE("degrees are additive on nonzero products")
{
    for (const auto& gr : {finest_grading(4), finest_grading(5), grading("Z_2", {{0}, {1}, {0}})}) {
        const int m = gr.size();
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j)
                for (int k = 1; k <= m; ++k)
                    for (int l = k; l <= m; ++l)
                        if (!(e(m, i, j) * e(m, k, l)).is_zero())
                            CHECK(gr.degree(i, l) == gr.degree(i, j) + gr.degree(k, l));
    }
}

TEST_CASE("sym_skew_basis")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto& c2 = u.grading().group();
    CHECK(sym_skew_basis(u, c2.zero(), Sign::plus) ==
          std::vector<UTMatrix>{e(3, 1, 1) + e(3, 3, 3), e(3, 1, 3), e(3, 2, 2)});
    CHECK(sym_skew_basis(u, c2.element({1}), Sign::minus) == std::vector<UTMatrix>{e(3, 1, 2) - e(3, 2, 3)});
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    CHECK(sym_skew_basis(f3, f3.grading().group().element({2}), Sign::minus).empty());
}

TEST_CASE("symmetric and skew parts split every component")
{
    std::vector<GradedStarAlgebra> algs{GradedStarAlgebra::ut3_z2()};
    for (int m = 1; m <= 6; ++m) {
        algs.push_back(GradedStarAlgebra::finest(m, InvolutionKind::reflection));
        if (m % 2 == 0)
            algs.push_back(GradedStarAlgebra::finest(m, InvolutionKind::symplectic));
    }
    for (const auto& a : algs)
        for (const auto& g : a.grading().support()) {
            const auto plus = sym_skew_basis(a, g, Sign::plus);
            const auto minus = sym_skew_basis(a, g, Sign::minus);
            CHECK(plus.size() + minus.size() == homogeneous_basis(a.grading(), g).size());
            for (const auto& b : plus)
                CHECK(a.involution().apply(b) == b);
            for (const auto& b : minus)
                CHECK(a.involution().apply(b) == -b);
        }
}

TEST_CASE("coarsen")
{
    const auto f3 = finest_grading(3);
    const auto& z = f3.group();
    const auto triv = AbelianGroup::trivial();
    const auto to_triv = coarsen(f3, GroupHom(z, triv, {triv.zero()}));
    CHECK(to_triv.support() == std::vector<GroupElement>{triv.zero()});

    const auto c2 = AbelianGroup::cyclic(2);
    const auto parity = coarsen(f3, GroupHom(z, c2, {c2.element({1})}));
    CHECK(parity.tuple() == std::vector<GroupElement>{c2.element({1}), c2.zero(), c2.element({1})});
    CHECK(same_degree_map(parity, grading("Z_2", {{0}, {1}, {0}})));

    CHECK(same_degree_map(coarsen(f3, GroupHom::identity(z)), f3));
    CHECK_THROWS_AS(coarsen(f3, GroupHom(c2, c2, {c2.element({1})})), StructuralError);
}

TEST_CASE("coarsening composes")
{
    const auto f4 = finest_grading(4);
    const auto& z2 = f4.group();
    const auto z = AbelianGroup::free_abelian(1);
    const auto c2 = AbelianGroup::cyclic(2);
    const GroupHom f(z2, z, {z.element({1}), z.element({2})});
    const GroupHom h(z, c2, {c2.element({1})});
    CHECK(coarsen(coarsen(f4, f), h).tuple() == coarsen(f4, f.then(h)).tuple());
}

TEST_CASE("normalize_shift keeps the degree map")
{
    const auto g = grading("Z", {{3}, {1}, {-1}});
    const auto n = normalize_shift(g);
    CHECK(n.tuple()[1] == g.group().zero());
    CHECK(same_degree_map(n, g));
}

TEST_CASE("coarsening_hom_from_finest")
{
    const auto z2 = grading("Z_2", {{0}, {1}, {0}});
    const auto alpha = coarsening_hom_from_finest(z2);
    REQUIRE(alpha);
    CHECK(same_degree_map(coarsen(finest_grading(3), *alpha), z2));
    CHECK_FALSE(coarsening_hom_from_finest(grading("Z", {{0}, {1}, {1}})));
    const auto f5 = finest_grading(5);
    const auto self = coarsening_hom_from_finest(f5);
    REQUIRE(self);
    CHECK(same_degree_map(coarsen(f5, *self), f5));
}

TEST_CASE("degree_uniqueness_check")
{
    for (int m = 1; m <= 8; ++m)
        CHECK(degree_uniqueness_check(m));
}
