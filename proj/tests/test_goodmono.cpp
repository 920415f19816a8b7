#include "gradstar/errors.hpp"
#include "gradstar/goodmono.hpp"

#include "doctest.h"

#include <set>

using namespace gradstar;

namespace {

Monomial parse_mono(const std::string& s, const AbelianGroup& g)
{
    const auto p = parse_polynomial(s, g);
    REQUIRE(p.size() == 1);
    return p.terms().begin()->first;
}

Integer sum(const std::vector<Integer>& v)
{
    Integer s = 0;
    for (const auto& x : v)
        s += x;
    return s;
}

} // namespace

TEST_CASE("is_good on small monomials")
{
    const auto z1 = finest_grading(3).group();
    CHECK(is_good(parse_mono("x[1,0] x[2,0]", z1), 3, InvolutionKind::reflection));
    CHECK_FALSE(is_good(parse_mono("x[2,0] x[1,0]", z1), 3, InvolutionKind::reflection));
    const auto c = good_conditions(parse_mono("x[2,0] x[1,0]", z1), 3, InvolutionKind::reflection);
    CHECK_FALSE(c.ascending);
    CHECK(c.non_identity);

    const auto z = finest_grading(2).group();
    const auto starred = good_conditions(parse_mono("x*[1,1]", z), 2, InvolutionKind::reflection);
    CHECK_FALSE(starred.one_dim_letters);
    CHECK(is_good(parse_mono("x[1,1]", z), 2, InvolutionKind::reflection));
}

TEST_CASE("conditions on products and neighbours")
{
    const auto z = finest_grading(3).group();
    const auto r = InvolutionKind::reflection;
    // e_1 + e_1 = 2 e_1 has a one-dimensional component: u_1 < u_2 and M_1 empty.
    CHECK(is_good(parse_mono("x[1,1] x[2,1]", z), 3, r));
    CHECK_FALSE(good_conditions(parse_mono("x[2,1] x[1,1]", z), 3, r).one_dim_products);
    CHECK_FALSE(good_conditions(parse_mono("x[3,0] x[1,1] x[2,1]", z), 3, r).one_dim_products);
    // unit neighbours force a starless middle block
    CHECK_FALSE(good_conditions(parse_mono("x[1,1] x*[3,0] x[2,1]", z), 3, r).unit_neighbours);
    CHECK(is_good(parse_mono("x[1,1] x[3,0] x[2,1]", z), 3, r));
    // single unit letter: stars on both sides
    CHECK_FALSE(good_conditions(parse_mono("x*[1,0] x[2,1] x*[3,0]", z), 3, r).single_letter);
    CHECK(good_conditions(parse_mono("x*[1,0] x[2,1] x[3,0]", z), 3, r).single_letter);
    // k = m is always an identity
    CHECK_FALSE(good_conditions(parse_mono("x[1,1] x[2,1] x[3,1]", z), 3, r).non_identity);
}

TEST_CASE("is_good preconditions")
{
    const auto z = finest_grading(3).group();
    CHECK_THROWS_AS(is_good(parse_mono("x[1,0] x[1,0]", z), 3, InvolutionKind::reflection), PreconditionError);
    CHECK_THROWS_AS(is_good(parse_mono("x[1,0,0]", AbelianGroup::free_abelian(2)), 3, InvolutionKind::reflection),
                    StructuralError);
}

TEST_CASE("enumerate_good m=2 n=2")
{
    const auto g = enumerate_good(2, 2, InvolutionKind::reflection);
    CHECK(g.monomials.size() == 8);
    REQUIRE(g.counts.size() == 2);
    CHECK(g.counts[0].count == 4);
    CHECK(g.counts[1].count == 4);
    CHECK(g.counts[1].k == 1);
    for (const auto& m : g.monomials)
        CHECK(is_good(m, 2, InvolutionKind::reflection));
}

TEST_CASE("enumerated monomials are good and distinct")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n) {
            const auto g = enumerate_good(m, n, InvolutionKind::reflection);
            std::set<Monomial> seen(g.monomials.begin(), g.monomials.end());
            CHECK(seen.size() == g.monomials.size());
            for (const auto& mono : g.monomials)
                CHECK(is_good(mono, m, InvolutionKind::reflection));
        }
}

TEST_CASE("N_1 for m = 2")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(count_good(2, n, InvolutionKind::reflection)[1] == Integer(n) * (Integer(1) << (n - 1)));
}

TEST_CASE("counts match the codimension oracle")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 3; ++n)
            CHECK(sum(count_good(m, n, InvolutionKind::reflection)) ==
                  codimension(GradedStarAlgebra::finest(m, InvolutionKind::reflection), n).value);
    CHECK(sum(count_good(3, 1, InvolutionKind::reflection)) == 5);
    for (int n = 1; n <= 3; ++n)
        CHECK(sum(count_good(4, n, InvolutionKind::symplectic)) ==
              codimension(GradedStarAlgebra::finest(4, InvolutionKind::symplectic), n).value);
}

TEST_CASE("closed and derived top counts")
{
    CHECK(closed_count_top(2, 3) == 12);
    CHECK(closed_count_top(3, 2) == 8);
    CHECK(closed_count_top(4, 3) == 24);
    CHECK(closed_count_top(3, 1) == 0);
    CHECK(derived_count_top(3, 2) == 4);
    CHECK(derived_count_top(4, 3) == 12);
    for (int m = 2; m <= 5; ++m)
        for (int n = m - 1; n <= 6; ++n)
            CHECK(derived_count_top(m, n) == count_good(m, n, InvolutionKind::reflection, m - 1)[static_cast<std::size_t>(m - 1)]);
    for (int n = 1; n <= 6; ++n)
        CHECK(closed_count_top(2, n) == count_good(2, n, InvolutionKind::reflection)[1]);
}

TEST_CASE("monomial identities")
{
    const auto z = finest_grading(3).group();
    const auto ids = monomial_identities(3, 3);
    const std::set<Monomial> s(ids.begin(), ids.end());
    CHECK(s.count(parse_mono("x[1,1] x[2,1] x[3,1]", z)) == 1);
    CHECK(s.count(parse_mono("x[1,2] x[2,2]", z)) == 1);
    CHECK(s.count(parse_mono("x[1,1] x[2,1]", z)) == 0);
    for (const auto& m : ids)
        CHECK(monomial_is_identity(m, GradedStarAlgebra::finest(3, InvolutionKind::reflection)));
    CHECK_THROWS_AS(monomial_identities(3, 4), PreconditionError);
}

TEST_CASE("tuple counts")
{
    CHECK(tuple_count(3, 2) == 8);
    CHECK(tuple_count(0, 5) == 1);
    CHECK(tuple_count(4, 3) == 81);
    for (int n = 0; n <= 5; ++n)
        for (int t = 1; t <= 4; ++t)
            CHECK(tuple_count_check(n, t));
}

TEST_CASE("upper bound on N_k")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 5; ++n) {
            const auto counts = count_good(m, n, InvolutionKind::reflection);
            for (int k = 0; k < m; ++k)
                CHECK(counts[static_cast<std::size_t>(k)] <= good_upper_bound(m, n, k));
        }
}
