#pragma once

// Upper triangular matrices over Q with elementary gradings and the
// reflection / symplectic involutions.

#include "gradstar/abgroup.hpp"
#include "gradstar/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gradstar {

class UTMatrix {
public:
    UTMatrix() = default;
    explicit UTMatrix(int m);

    // e_{ij}, 1-based, requires i <= j.
    static UTMatrix elementary(int m, int i, int j);
    static UTMatrix identity(int m);

    int size() const { return m_; }
    // 1-based access.
    const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }
    // Writes to the strictly lower part throw StructuralError.
    void set(int i, int j, const Rational& v);

    bool is_zero() const;

    UTMatrix operator+(const UTMatrix& o) const;
    UTMatrix operator-(const UTMatrix& o) const;
    UTMatrix operator*(const UTMatrix& o) const;
    UTMatrix operator*(const Rational& c) const;
    UTMatrix operator-() const;

    friend bool operator==(const UTMatrix& a, const UTMatrix& b) { return a.m_ == b.m_ && a.entries_ == b.entries_; }

    // "e11+e33", "-2*e12", "0".
    std::string to_string() const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * m_ + (j - 1)); }
    void require_same_size(const UTMatrix& o) const;

    int m_ = 0;
    std::vector<Rational> entries_;
};

UTMatrix matrix_mul(const UTMatrix& a, const UTMatrix& b);

enum class InvolutionKind { reflection, symplectic };

std::string to_string(InvolutionKind k);
InvolutionKind parse_involution_kind(const std::string& s);

class Involution {
public:
    // Throws UnsupportedInvolution for symplectic on odd m.
    Involution(InvolutionKind kind, int m);

    InvolutionKind kind() const { return kind_; }
    int size() const { return m_; }

    // e_{ij}^* = sign * e_{i'j'}
    struct ElementaryImage {
        int sign;
        int i;
        int j;
    };
    ElementaryImage on_elementary(int i, int j) const;

    UTMatrix apply(const UTMatrix& a) const;

private:
    InvolutionKind kind_;
    int m_;
};

UTMatrix apply_involution(const Involution& inv, const UTMatrix& a);

class ElementaryGrading {
public:
    ElementaryGrading(AbelianGroup group, std::vector<GroupElement> tuple);

    int size() const { return static_cast<int>(tuple_.size()); }
    const AbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& tuple() const { return tuple_; }

    // g_i - g_j, 1-based.
    GroupElement degree(int i, int j) const;
    // Sorted degrees of nonzero components; always contains the neutral element.
    std::vector<GroupElement> support() const;
    int component_dim(const GroupElement& g) const;
    // (i, j) positions with i <= j and degree g.
    std::vector<std::pair<int, int>> positions(const GroupElement& g) const;

    std::string describe() const;

private:
    AbelianGroup group_;
    std::vector<GroupElement> tuple_;
};

// The Z^{floor(m/2)} grading refining every elementary grading that admits
// a graded involution.
ElementaryGrading finest_grading(int m);

// Subtracts g_{r+1} (r = floor(m/2)) from every entry; the degree map is unchanged.
ElementaryGrading normalize_shift(const ElementaryGrading& grading);

// Equality of the degree maps on elementary matrices.
bool same_degree_map(const ElementaryGrading& a, const ElementaryGrading& b);

bool admits_mirror_condition(const ElementaryGrading& grading);
bool is_graded_involution(const ElementaryGrading& grading, const Involution& inv);

std::vector<UTMatrix> homogeneous_basis(const ElementaryGrading& grading, const GroupElement& g);

ElementaryGrading coarsen(const ElementaryGrading& grading, const GroupHom& f);

// For the finest grading: equal nonzero degrees force e_kl in {e_ij, e_ij^*}.
bool degree_uniqueness_check(int m);

class GradedStarAlgebra {
public:
    // Throws PreconditionError when the involution is not graded.
    GradedStarAlgebra(ElementaryGrading grading, Involution involution);

    static GradedStarAlgebra finest(int m, InvolutionKind kind);
    // UT_3 with the Z_2-grading induced by (0,1,0) and the reflection involution.
    static GradedStarAlgebra ut3_z2();

    const ElementaryGrading& grading() const { return grading_; }
    const Involution& involution() const { return involution_; }
    int size() const { return grading_.size(); }

    // Short human readable label, e.g. "UT_3 Z^1 (1,0,-1) reflection".
    std::string describe() const;

private:
    ElementaryGrading grading_;
    Involution involution_;
};

enum class Sign { plus, minus };

// Basis of the (+1 / -1)-eigenspace of the involution on A_g, built from
// e_ij +- e_ij^*; fixed points appear as e_ij itself.
std::vector<UTMatrix> sym_skew_basis(const GradedStarAlgebra& alg, const GroupElement& g, Sign sign);

// Constructive side of "every grading admitting an involution is a coarsening
// of the finest one": after normalize_shift, alpha(e_i) = g_i. Returns the hom
// when the coarsened finest grading reproduces the degree map, nullopt otherwise.
std::optional<GroupHom> coarsening_hom_from_finest(const ElementaryGrading& grading);

} // namespace gradstar
