#include "gradstar/identities.hpp"

#include "gradstar/errors.hpp"

namespace gradstar {

namespace {

Polynomial x(int index, const GroupElement& g, bool starred = false)
{
    return Polynomial::variable(Variable{index, g, Symmetry::free}, starred);
}

} // namespace

std::vector<NamedIdentity> finest_reflection_identities(int m)
{
    if (m < 1)
        throw PreconditionError("m must be positive");
    const auto grading = finest_grading(m);
    const auto& G = grading.group();
    const auto e = G.zero();
    std::vector<NamedIdentity> out;
    out.push_back({"neutral-commutator", commutator(x(1, e), x(2, e))});
    for (const auto& g : grading.support())
        if (grading.component_dim(g) == 1)
            out.push_back({"one-dim-symmetric g=" + g.to_string(), x(1, g, true) - x(1, g)});
    if (m % 2 == 1) {
        const int r = m / 2;
        for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q) {
                const auto g = G.generator(static_cast<std::size_t>(p));
                const auto h = G.generator(static_cast<std::size_t>(q));
                out.push_back({"middle-star g=" + g.to_string() + " h=" + h.to_string(),
                               x(1, g) * x(2, e) * x(3, h) - x(1, g) * x(2, e, true) * x(3, h)});
            }
        for (int p = 0; p < r; ++p) {
            const auto g = G.generator(static_cast<std::size_t>(p));
            out.push_back({"neutral-skew-sandwich g=" + g.to_string(), (x(1, e) - x(1, e, true)) * x(2, g) * (x(3, e) - x(3, e, true))});
        }
    }
    return out;
}

std::vector<NamedIdentity> finest_symplectic_identities(int m)
{
    if (m % 2 != 0)
        throw UnsupportedInvolution("the symplectic involution needs even m, got " + std::to_string(m));
    const auto grading = finest_grading(m);
    const auto e = grading.group().zero();
    std::vector<NamedIdentity> out;
    out.push_back({"neutral-commutator", commutator(x(1, e), x(2, e))});
    for (const auto& g : grading.support())
        if (grading.component_dim(g) == 1)
            out.push_back({"one-dim-skew g=" + g.to_string(), x(1, g, true) + x(1, g)});
    return out;
}

namespace {

struct Kind {
    int degree;
    Symmetry sym;
    const char* name;
};

const Kind kYp{0, Symmetry::symmetric, "y+"};
const Kind kYm{0, Symmetry::skew, "y-"};
const Kind kZp{1, Symmetry::symmetric, "z+"};
const Kind kZm{1, Symmetry::skew, "z-"};
const Kind kAll[] = {kYp, kYm, kZp, kZm};
const Kind kZ[] = {kZp, kZm};

Polynomial v(const Kind& k, int index)
{
    static const AbelianGroup z2 = AbelianGroup::cyclic(2);
    return Polynomial::variable(Variable{index, z2.element({k.degree}), k.sym});
}

std::string kinds(std::initializer_list<const Kind*> ks)
{
    std::string s;
    for (const auto* k : ks)
        s += (s.empty() ? "" : ",") + std::string(k->name);
    return " [" + s + "]";
}

} // namespace

std::vector<NamedIdentity> ut3_z2_identities()
{
    std::vector<NamedIdentity> out;
    // Outer letters share their kind; the middle letter is arbitrary.
    for (const Kind* outer : {&kYm, &kZp, &kZm})
        for (const auto& mid : kAll)
            out.push_back({"swap-outer" + kinds({outer, &mid, outer}),
                           v(*outer, 1) * v(mid, 2) * v(*outer, 3) - v(*outer, 3) * v(mid, 2) * v(*outer, 1)});
    for (const auto& a : kZ)
        for (const auto& b : kZ)
            for (const auto& c : kZ)
                out.push_back({"odd-cube" + kinds({&a, &b, &c}), v(a, 1) * v(b, 2) * v(c, 3)});
    for (const auto& k : kAll)
        out.push_back({"same-kind-commutator" + kinds({&k, &k}), commutator(v(k, 1), v(k, 2))});
    const Polynomial yy = commutator(v(kYp, 1), v(kYm, 2));
    for (const auto& a : kAll)
        for (const auto& b : kAll)
            out.push_back({"double-commutator" + kinds({&a, &b}), yy * commutator(v(a, 3), v(b, 4))});
    for (const auto& a : kZ)
        for (const auto& b : kZ)
            out.push_back({"yplus-odd-pair" + kinds({&a, &b}), commutator(v(kYp, 1), v(a, 1) * v(b, 2))});
    for (const auto& a : kZ) {
        out.push_back({"commutator-odd-right" + kinds({&a}), yy * v(a, 3)});
        out.push_back({"commutator-odd-left" + kinds({&a}), v(a, 3) * yy});
    }
    out.push_back({"commutator-yminus-anti", yy * v(kYm, 3) + v(kYm, 3) * yy});
    for (const auto& a : kZ)
        out.push_back({"yminus-odd-yminus" + kinds({&a}), v(kYm, 1) * v(a, 1) * v(kYm, 2)});
    for (const auto& a : kZ)
        for (const auto& b : kZ)
            out.push_back({"odd-yminus-odd" + kinds({&a, &b}), v(a, 1) * v(kYm, 1) * v(b, 2)});
    out.push_back({"odd-anticommutator", v(kZp, 1) * v(kZm, 2) + v(kZm, 2) * v(kZp, 1)});
    for (const auto& a : kZ)
        for (const auto& b : kZ)
            out.push_back({"odd-pair-yminus-anti" + kinds({&a, &b}), v(a, 1) * v(b, 2) * v(kYm, 1) + v(kYm, 1) * v(a, 1) * v(b, 2)});
    for (const auto& a : kZ)
        for (const auto& b : kZ)
            out.push_back({"yplus-derivation" + kinds({&a, &b}),
                           commutator(v(a, 1), v(kYp, 1)) * v(b, 2) + v(a, 1) * commutator(v(b, 2), v(kYp, 1))});
    return out;
}

std::vector<NamedIdentity> identity_set(const std::string& name, int m)
{
    if (name == "finest-reflection")
        return finest_reflection_identities(m);
    if (name == "finest-symplectic")
        return finest_symplectic_identities(m);
    if (name == "ut3-z2")
        return ut3_z2_identities();
    throw PreconditionError("unknown identity set '" + name + "' (finest-reflection, finest-symplectic, ut3-z2)");
}

GradedStarAlgebra identity_set_algebra(const std::string& name, int m)
{
    if (name == "finest-reflection")
        return GradedStarAlgebra::finest(m, InvolutionKind::reflection);
    if (name == "finest-symplectic") {
        if (m % 2 != 0)
            throw UnsupportedInvolution("the symplectic involution needs even m, got " + std::to_string(m));
        return GradedStarAlgebra::finest(m, InvolutionKind::symplectic);
    }
    if (name == "ut3-z2")
        return GradedStarAlgebra::ut3_z2();
    throw PreconditionError("unknown identity set '" + name + "' (finest-reflection, finest-symplectic, ut3-z2)");
}

std::vector<Polynomial> polynomials(const std::vector<NamedIdentity>& ids)
{
    std::vector<Polynomial> out;
    for (const auto& i : ids)
        out.push_back(i.poly);
    return out;
}

} // namespace gradstar
