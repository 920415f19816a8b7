#include "gradstar/utalg.hpp"

#include "gradstar/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gradstar {

UTMatrix::UTMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m * m))
{
    if (m < 1)
        throw StructuralError("matrix size must be positive");
}

UTMatrix UTMatrix::elementary(int m, int i, int j)
{
    UTMatrix e(m);
    e.set(i, j, 1);
    return e;
}

UTMatrix UTMatrix::identity(int m)
{
    UTMatrix e(m);
    for (int i = 1; i <= m; ++i)
        e.set(i, i, 1);
    return e;
}

void UTMatrix::set(int i, int j, const Rational& v)
{
    if (i < 1 || j < 1 || i > m_ || j > m_)
        throw StructuralError("matrix index out of range");
    if (i > j) {
        if (v == 0)
            return;
        throw StructuralError("upper triangular matrix cannot have a nonzero entry below the diagonal");
    }
    entries_[index(i, j)] = v;
    entries_[index(i, j)].canonicalize();
}

bool UTMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

void UTMatrix::require_same_size(const UTMatrix& o) const
{
    if (m_ != o.m_)
        throw StructuralError("matrix size mismatch: " + std::to_string(m_) + " vs " + std::to_string(o.m_));
}

UTMatrix UTMatrix::operator+(const UTMatrix& o) const
{
    require_same_size(o);
    UTMatrix r(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] += o.entries_[k];
    return r;
}

UTMatrix UTMatrix::operator-(const UTMatrix& o) const
{
    require_same_size(o);
    UTMatrix r(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] -= o.entries_[k];
    return r;
}

UTMatrix UTMatrix::operator-() const
{
    UTMatrix r(*this);
    for (auto& q : r.entries_)
        q = -q;
    return r;
}

UTMatrix UTMatrix::operator*(const Rational& c) const
{
    UTMatrix r(*this);
    for (auto& q : r.entries_)
        q *= c;
    return r;
}

UTMatrix UTMatrix::operator*(const UTMatrix& o) const
{
    require_same_size(o);
    UTMatrix r(m_);
    for (int i = 1; i <= m_; ++i)
        for (int k = i; k <= m_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = k; j <= m_; ++j)
                if (o(k, j) != 0)
                    r.entries_[r.index(i, j)] += a * o(k, j);
        }
    return r;
}

std::string UTMatrix::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= m_; ++i)
        for (int j = i; j <= m_; ++j) {
            Rational q = (*this)(i, j);
            if (q == 0)
                continue;
            if (q < 0) {
                os << '-';
                q = -q;
            } else if (!first) {
                os << '+';
            }
            if (q != 1)
                os << gradstar::to_string(q) << '*';
            os << 'e' << i << j;
            first = false;
        }
    if (first)
        os << '0';
    return os.str();
}

UTMatrix matrix_mul(const UTMatrix& a, const UTMatrix& b) { return a * b; }

std::string to_string(InvolutionKind k) { return k == InvolutionKind::reflection ? "reflection" : "symplectic"; }

InvolutionKind parse_involution_kind(const std::string& s)
{
    if (s == "reflection" || s == "ref" || s == "*")
        return InvolutionKind::reflection;
    if (s == "symplectic" || s == "symp" || s == "s")
        return InvolutionKind::symplectic;
    throw ParseError("unknown involution '" + s + "' (expected reflection or symplectic)");
}

Involution::Involution(InvolutionKind kind, int m) : kind_(kind), m_(m)
{
    if (m < 1)
        throw StructuralError("matrix size must be positive");
    if (kind == InvolutionKind::symplectic && m % 2 != 0)
        throw UnsupportedInvolution("the symplectic involution needs an even matrix size, got m=" + std::to_string(m));
}

Involution::ElementaryImage Involution::on_elementary(int i, int j) const
{
    ElementaryImage img{1, m_ + 1 - j, m_ + 1 - i};
    if (kind_ == InvolutionKind::symplectic) {
        // D = diag(I_r, -I_r) and D^{-1} = D.
        const int r = m_ / 2;
        const int di = img.i <= r ? 1 : -1;
        const int dj = img.j <= r ? 1 : -1;
        img.sign = di * dj;
    }
    return img;
}

UTMatrix Involution::apply(const UTMatrix& a) const
{
    if (a.size() != m_)
        throw StructuralError("involution and matrix sizes differ");
    UTMatrix r(m_);
    for (int i = 1; i <= m_; ++i)
        for (int j = i; j <= m_; ++j) {
            if (a(i, j) == 0)
                continue;
            auto img = on_elementary(i, j);
            r.set(img.i, img.j, img.sign > 0 ? a(i, j) : Rational(-a(i, j)));
        }
    return r;
}

UTMatrix apply_involution(const Involution& inv, const UTMatrix& a) { return inv.apply(a); }

ElementaryGrading::ElementaryGrading(AbelianGroup group, std::vector<GroupElement> tuple)
    : group_(std::move(group)), tuple_(std::move(tuple))
{
    if (tuple_.empty())
        throw StructuralError("an elementary grading needs a nonempty tuple");
    for (const auto& g : tuple_)
        if (!(g.group() == group_))
            throw StructuralError("tuple entry " + g.to_string() + " is not in " + group_.to_string());
}

GroupElement ElementaryGrading::degree(int i, int j) const { return tuple_[i - 1] - tuple_[j - 1]; }

std::vector<GroupElement> ElementaryGrading::support() const
{
    std::set<GroupElement> s;
    for (int i = 1; i <= size(); ++i)
        for (int j = i; j <= size(); ++j)
            s.insert(degree(i, j));
    return {s.begin(), s.end()};
}

int ElementaryGrading::component_dim(const GroupElement& g) const
{
    return static_cast<int>(positions(g).size());
}

std::vector<std::pair<int, int>> ElementaryGrading::positions(const GroupElement& g) const
{
    std::vector<std::pair<int, int>> out;
    if (!(g.group() == group_))
        return out;
    for (int i = 1; i <= size(); ++i)
        for (int j = i; j <= size(); ++j)
            if (degree(i, j) == g)
                out.emplace_back(i, j);
    return out;
}

std::string ElementaryGrading::describe() const
{
    std::ostringstream os;
    os << group_.to_string() << " (";
    for (std::size_t i = 0; i < tuple_.size(); ++i)
        os << (i ? ";" : "") << tuple_[i].to_string();
    os << ')';
    return os.str();
}

ElementaryGrading finest_grading(int m)
{
    if (m < 1)
        throw PreconditionError("finest grading needs m >= 1");
    const int r = m / 2;
    AbelianGroup g = AbelianGroup::free_abelian(static_cast<std::size_t>(r));
    std::vector<GroupElement> tuple;
    for (int i = 0; i < r; ++i)
        tuple.push_back(g.generator(static_cast<std::size_t>(i)));
    tuple.push_back(g.zero());
    if (m % 2 == 0) {
        // e_r - e_{r-1}, ..., e_r - e_1
        for (int i = r - 1; i >= 1; --i)
            tuple.push_back(g.generator(static_cast<std::size_t>(r - 1)) - g.generator(static_cast<std::size_t>(i - 1)));
    } else {
        for (int i = r; i >= 1; --i)
            tuple.push_back(-g.generator(static_cast<std::size_t>(i - 1)));
    }
    return ElementaryGrading(g, std::move(tuple));
}

ElementaryGrading normalize_shift(const ElementaryGrading& grading)
{
    const int r = grading.size() / 2;
    const GroupElement pivot = grading.tuple()[static_cast<std::size_t>(r)];
    std::vector<GroupElement> t;
    for (const auto& g : grading.tuple())
        t.push_back(g - pivot);
    return ElementaryGrading(grading.group(), std::move(t));
}

bool same_degree_map(const ElementaryGrading& a, const ElementaryGrading& b)
{
    if (a.size() != b.size() || !(a.group() == b.group()))
        return false;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = i + 1; j <= a.size(); ++j)
            if (!(a.degree(i, j) == b.degree(i, j)))
                return false;
    return true;
}

bool admits_mirror_condition(const ElementaryGrading& grading)
{
    const auto& t = grading.tuple();
    const std::size_t m = t.size();
    const GroupElement target = t.front() + t.back();
    for (std::size_t i = 0; i < m; ++i)
        if (!(t[i] + t[m - 1 - i] == target))
            return false;
    return true;
}

bool is_graded_involution(const ElementaryGrading& grading, const Involution& inv)
{
    if (inv.size() != grading.size())
        return false;
    for (int i = 1; i <= grading.size(); ++i)
        for (int j = i; j <= grading.size(); ++j) {
            auto img = inv.on_elementary(i, j);
            if (!(grading.degree(img.i, img.j) == grading.degree(i, j)))
                return false;
        }
    return true;
}

std::vector<UTMatrix> homogeneous_basis(const ElementaryGrading& grading, const GroupElement& g)
{
    std::vector<UTMatrix> out;
    for (auto [i, j] : grading.positions(g))
        out.push_back(UTMatrix::elementary(grading.size(), i, j));
    return out;
}

ElementaryGrading coarsen(const ElementaryGrading& grading, const GroupHom& f)
{
    if (!(f.domain() == grading.group()))
        throw StructuralError("coarsening hom has domain " + f.domain().to_string() + " but the grading is over " +
                              grading.group().to_string());
    std::vector<GroupElement> t;
    for (const auto& g : grading.tuple())
        t.push_back(f(g));
    return ElementaryGrading(f.codomain(), std::move(t));
}

bool degree_uniqueness_check(int m)
{
    const ElementaryGrading fg = finest_grading(m);
    const Involution inv(InvolutionKind::reflection, m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            const GroupElement d = fg.degree(i, j);
            if (d.is_zero())
                continue;
            const auto star = inv.on_elementary(i, j);
            for (int k = 1; k <= m; ++k)
                for (int l = k; l <= m; ++l) {
                    if (!(fg.degree(k, l) == d))
                        continue;
                    const bool same = k == i && l == j;
                    const bool mirrored = k == star.i && l == star.j;
                    if (!same && !mirrored)
                        return false;
                }
        }
    return true;
}

GradedStarAlgebra::GradedStarAlgebra(ElementaryGrading grading, Involution involution)
    : grading_(std::move(grading)), involution_(involution)
{
    if (involution_.size() != grading_.size())
        throw StructuralError("grading and involution sizes differ");
    if (!is_graded_involution(grading_, involution_))
        throw PreconditionError("the " + to_string(involution_.kind()) + " involution is not graded for " +
                                grading_.describe());
}

GradedStarAlgebra GradedStarAlgebra::finest(int m, InvolutionKind kind)
{
    return GradedStarAlgebra(finest_grading(m), Involution(kind, m));
}

GradedStarAlgebra GradedStarAlgebra::ut3_z2()
{
    AbelianGroup z2 = AbelianGroup::cyclic(2);
    return GradedStarAlgebra(ElementaryGrading(z2, {z2.element({0}), z2.element({1}), z2.element({0})}),
                             Involution(InvolutionKind::reflection, 3));
}

std::string GradedStarAlgebra::describe() const
{
    return "UT_" + std::to_string(size()) + " " + grading_.describe() + " " + to_string(involution_.kind());
}

std::vector<UTMatrix> sym_skew_basis(const GradedStarAlgebra& alg, const GroupElement& g, Sign sign)
{
    const int want = sign == Sign::plus ? 1 : -1;
    const int m = alg.size();
    std::vector<UTMatrix> out;
    for (auto [i, j] : alg.grading().positions(g)) {
        auto img = alg.involution().on_elementary(i, j);
        if (img.i == i && img.j == j) {
            if (img.sign == want)
                out.push_back(UTMatrix::elementary(m, i, j));
            continue;
        }
        if (std::pair(i, j) > std::pair(img.i, img.j))
            continue;
        UTMatrix v = UTMatrix::elementary(m, i, j);
        v.set(img.i, img.j, want * img.sign);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<GroupHom> coarsening_hom_from_finest(const ElementaryGrading& grading)
{
    if (!admits_mirror_condition(grading))
        return std::nullopt;
    const ElementaryGrading norm = normalize_shift(grading);
    const int r = grading.size() / 2;
    const ElementaryGrading fg = finest_grading(grading.size());
    std::vector<GroupElement> images(norm.tuple().begin(), norm.tuple().begin() + r);
    GroupHom alpha(fg.group(), grading.group(), std::move(images));
    if (!same_degree_map(coarsen(fg, alpha), grading))
        return std::nullopt;
    return alpha;
}

} // namespace gradstar
