#include "gradstar/errors.hpp"
#include "gradstar/eval.hpp"
#include "gradstar/goodmono.hpp"
#include "gradstar/identities.hpp"

#include "doctest.h"

#include <random>

using namespace gradstar;

namespace {

UTMatrix e(int m, int i, int j) { return UTMatrix::elementary(m, i, j); }

Variable var(int i, const GroupElement& g, Symmetry s = Symmetry::free) { return Variable{i, g, s}; }

OracleOptions opts(VariableModel model = VariableModel::symskew, int workers = 1)
{
    OracleOptions o;
    o.budget = 50'000'000;
    o.model = model;
    o.workers = workers;
    return o;
}

} // namespace

TEST_CASE("evaluate")
{
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    const auto& z = f3.grading().group();
    const auto n0 = z.zero(), e1 = z.element({1});
    const auto comm = parse_polynomial("[x[1,0], x[2,0]]", z);
    CHECK(evaluate(comm, {{var(1, n0), e(3, 1, 1)}, {var(2, n0), e(3, 2, 2)}}, f3).is_zero());
    const auto prod = parse_polynomial("x[1,1] x[2,1]", z);
    CHECK(evaluate(prod, {{var(1, e1), e(3, 1, 2)}, {var(2, e1), e(3, 2, 3)}}, f3) == e(3, 1, 3));
    CHECK(evaluate(parse_polynomial("x*[1,1]", z), {{var(1, e1), e(3, 1, 2)}}, f3) == e(3, 2, 3));

    const auto u = GradedStarAlgebra::ut3_z2();
    const auto& c2 = u.grading().group();
    const auto anti = parse_polynomial("z+[1] z-[2] + z-[2] z+[1]", c2);
    CHECK(evaluate(anti,
                   {{var(1, c2.element({1}), Symmetry::symmetric), e(3, 1, 2) + e(3, 2, 3)},
                    {var(2, c2.element({1}), Symmetry::skew), e(3, 1, 2) - e(3, 2, 3)}},
                   u)
              .is_zero());
}

TEST_CASE("evaluate rejects bad substitutions")
{
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    const auto& z = f3.grading().group();
    const auto p = parse_polynomial("x[1,1]", z);
    CHECK_THROWS_AS(evaluate(p, {}, f3), PreconditionError);
    CHECK_THROWS_AS(evaluate(p, {{var(1, z.element({1})), e(3, 1, 3)}}, f3), PreconditionError);
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto& c2 = u.grading().group();
    CHECK_THROWS_AS(evaluate(parse_polynomial("z-[1]", c2),
                             {{var(1, c2.element({1}), Symmetry::skew), e(3, 1, 2) + e(3, 2, 3)}}, u),
                    PreconditionError);
}

TEST_CASE("evaluation respects degrees and the involution")
{
    std::mt19937 rng(5);
    const auto f4 = GradedStarAlgebra::finest(4, InvolutionKind::symplectic);
    const auto& g = f4.grading();
    const auto support = g.support();
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1), coef(-3, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Letter> letters;
        Substitution s;
        GroupElement total = g.group().zero();
        for (int i = 1; i <= 3; ++i) {
            const auto d = support[pick(rng)];
            total = total + d;
            letters.push_back(Letter{var(i, d), coin(rng) == 1});
            UTMatrix img(4);
            for (const auto& b : homogeneous_basis(g, d))
                img = img + b * Rational(coef(rng));
            s[var(i, d)] = img;
        }
        const auto w = Polynomial::word(letters);
        std::vector<Letter> rev(letters.rbegin(), letters.rend());
        const auto p = w + Polynomial::word(rev);
        const auto v = evaluate(p, s, f4);
        for (int i = 1; i <= 4; ++i)
            for (int j = i; j <= 4; ++j)
                if (v(i, j) != 0)
                    CHECK(g.degree(i, j) == total);
        CHECK(evaluate(poly_star(p), s, f4) == f4.involution().apply(v));
    }
}

TEST_CASE("is_identity on the built-in sets")
{
    for (int m : {3, 5}) {
        const auto a = GradedStarAlgebra::finest(m, InvolutionKind::reflection);
        for (const auto& id : finest_reflection_identities(m))
            CHECK_MESSAGE(is_identity(id.poly, a), id.label);
    }
    const auto u = GradedStarAlgebra::ut3_z2();
    for (const auto& id : ut3_z2_identities())
        CHECK_MESSAGE(is_identity(id.poly, u), id.label);
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    CHECK_FALSE(is_identity(parse_polynomial("x[1,1]", f3.grading().group()), f3));
    CHECK_THROWS_AS(is_identity(parse_polynomial("x[1,0] x[1,0]", f3.grading().group()), f3), PreconditionError);
}

TEST_CASE("non-identities are detected")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto& c2 = u.grading().group();
    CHECK(is_identity(parse_polynomial("y-[1] z+[1] y-[2] - y-[2] z+[1] y-[1]", c2), u));
    CHECK_FALSE(is_identity(parse_polynomial("y-[1] z+[1] - z+[1] y-[1]", c2), u));
    CHECK_FALSE(is_identity(parse_polynomial("[y+[1], y-[2]]", c2), u));
}

TEST_CASE("symplectic sign identity on one-dimensional components")
{
    for (int m : {2, 4, 6}) {
        const auto a = GradedStarAlgebra::finest(m, InvolutionKind::symplectic);
        for (const auto& g : a.grading().support())
            if (a.grading().component_dim(g) == 1) {
                const auto x = Polynomial::variable(var(1, g));
                CHECK(is_identity(x + Polynomial::variable(var(1, g), true), a));
                CHECK_FALSE(is_identity(x - Polynomial::variable(var(1, g), true), a));
            }
    }
}

TEST_CASE("unique_substitution")
{
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    const auto& z = f3.grading().group();
    const auto e1 = z.element({1});
    const Monomial two({Letter{var(1, e1)}, Letter{var(2, e1)}});
    const auto s = unique_substitution(two, f3);
    REQUIRE(s);
    CHECK(s->at(var(1, e1)) == e(3, 1, 2));
    CHECK(s->at(var(2, e1)) == e(3, 2, 3));
    const Monomial three({Letter{var(1, e1)}, Letter{var(2, e1)}, Letter{var(3, e1)}});
    CHECK_FALSE(unique_substitution(three, f3));
    const Monomial one({Letter{var(1, z.element({2}))}});
    CHECK_THROWS_AS(unique_substitution(one, f3), PreconditionError);
}

TEST_CASE("codimension small values")
{
    const auto f2 = GradedStarAlgebra::finest(2, InvolutionKind::reflection);
    CHECK(codimension(f2, 2, opts()).value == 8);
    CHECK(codimension(f2, 0, opts()).value == 1);
    const auto u = GradedStarAlgebra::ut3_z2();
    CHECK(codimension(u, 1, opts()).value == 4);
    CHECK(codimension(u, 0, opts()).value == 1);
    for (int n = 1; n <= 5; ++n) {
        const Integer expected = (Integer(1) << n) + Integer(n) * (Integer(1) << (n - 1));
        CHECK(codimension(f2, n, opts()).value == expected);
    }
}

TEST_CASE("frozen codimension values")
{
    // Rank oracle values, cross-checked by the free and the symmetric/skew
    // models and by good monomial counts where those apply.
    const auto u = GradedStarAlgebra::ut3_z2();
    const std::vector<long> ut3z2{1, 4, 26, 137, 628};
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    const std::vector<long> fin3{1, 5, 28, 140, 632};
    for (int n = 0; n <= 4; ++n) {
        CHECK(codimension(u, n, opts()).value == ut3z2[static_cast<std::size_t>(n)]);
        CHECK(codimension(f3, n, opts()).value == fin3[static_cast<std::size_t>(n)]);
    }
    CHECK(codimension(GradedStarAlgebra::finest(4, InvolutionKind::reflection), 3, opts()).value == 428);
}

TEST_CASE("free and symmetric/skew models agree")
{
    std::vector<GradedStarAlgebra> algs{GradedStarAlgebra::ut3_z2(),
                                        GradedStarAlgebra::finest(3, InvolutionKind::reflection),
                                        GradedStarAlgebra::finest(4, InvolutionKind::symplectic)};
    for (const auto& a : algs)
        for (int n = 1; n <= 3; ++n)
            CHECK(codimension(a, n, opts(VariableModel::free)).value ==
                  codimension(a, n, opts(VariableModel::symskew)).value);
}

TEST_CASE("parallel blocks give the same report")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto a = codimension(u, 3, opts(VariableModel::symskew, 1));
    const auto b = codimension(u, 3, opts(VariableModel::symskew, 4));
    CHECK(a.value == b.value);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        CHECK(a.blocks[i].rank == b.blocks[i].rank);
}

TEST_CASE("explicit degree universe")
{
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    const auto& z = f3.grading().group();
    std::vector<GroupElement> uni{z.zero(), z.element({1}), z.element({2}), z.element({7})};
    CHECK(codimension(f3, 2, uni, opts()).value == 28);
}

TEST_CASE("budget refusal")
{
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    OracleOptions o;
    o.budget = 10;
    CHECK_THROWS_AS(codimension(f3, 2, o), BudgetExceeded);
}

TEST_CASE("proper codimension")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    CHECK(proper_codimension(u, 0, opts()).value == 1);
    CHECK(proper_codimension(u, 1, opts()).value == 3);
    CHECK(proper_codimension(u, 2, opts()).value == 19);
    CHECK(proper_codimension(u, 3, opts()).value == 70);
    CHECK_THROWS_AS(proper_codimension(GradedStarAlgebra::finest(3, InvolutionKind::reflection), 1, opts()),
                    PreconditionError);
}

TEST_CASE("codim_gamma_relation")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto r = codim_gamma_relation(u, 3, opts());
    CHECK(r.holds);
    CHECK(r.c[0] == 1);
    CHECK(r.gamma[0] == 1);
    CHECK(r.c[1] == r.gamma[0] + r.gamma[1]);
    CHECK(r.c[1] == 4);
}

TEST_CASE("basis certificates")
{
    const auto f3 = GradedStarAlgebra::finest(3, InvolutionKind::reflection);
    auto S = polynomials(finest_reflection_identities(3));
    for (const auto& mono : monomial_identities(3, 2))
        S.push_back(Polynomial::word(mono.letters()));
    const auto c2 = basis_certificate(S, f3, 2, opts());
    CHECK(c2.verified);

    const auto u = GradedStarAlgebra::ut3_z2();
    const auto c3 = basis_certificate(polynomials(ut3_z2_identities()), u, 3, opts());
    CHECK(c3.verified);
    for (const auto& b : c3.blocks) {
        CHECK(b.kernel_containment);
        CHECK(b.consequence_rank + b.eval_rank == b.space_dim);
    }

    const auto none = basis_certificate({}, u, 2, opts());
    CHECK_FALSE(none.verified);
    REQUIRE(none.counterexample);
    CHECK(is_identity(*none.counterexample, u));
}

TEST_CASE("basis certificate reports a non-identity")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto bad = basis_certificate({parse_polynomial("z+[1] z+[2]", u.grading().group())}, u, 2, opts());
    CHECK_FALSE(bad.verified);
}

TEST_CASE("nth roots")
{
    const auto r = nth_root_report(28, 2);
    CHECK(r.decimal == "5.291503");
    CHECK_FALSE(r.exact);
    const auto s = nth_root_report(4, 1);
    CHECK(s.decimal == "4.000000");
    CHECK(s.exact);
    CHECK(nth_root_report(1, 5).decimal == "1.000000");
    CHECK(nth_root_report(Integer(1) << 20, 4).decimal == "32.000000");
    // 2^{1/2} = 1.41421356..., 3^{1/3} = 1.44224957...
    CHECK(nth_root_report(2, 2).decimal == "1.414214");
    CHECK(nth_root_report(3, 3).decimal == "1.442250");
    const auto [scaled, exact] = scaled_root(2, 2, 3);
    CHECK(scaled == 1414);
    CHECK_FALSE(exact);
}

TEST_CASE("predicted exponents")
{
    CHECK(predicted_exponent(GradedStarAlgebra::finest(2, InvolutionKind::reflection)) == 2);
    CHECK(predicted_exponent(GradedStarAlgebra::finest(3, InvolutionKind::reflection)) == 4);
    CHECK(predicted_exponent(GradedStarAlgebra::finest(4, InvolutionKind::symplectic)) == 4);
    CHECK(predicted_exponent(GradedStarAlgebra::ut3_z2()) == 3);
}

TEST_CASE("binomial and factorial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
}

TEST_CASE("variable model names")
{
    CHECK(parse_variable_model("free") == VariableModel::free);
    CHECK(to_string(VariableModel::symskew) == "symskew");
    CHECK_THROWS_AS(parse_variable_model("other"), ParseError);
}
