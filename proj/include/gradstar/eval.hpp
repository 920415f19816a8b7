#pragma once

// Evaluation of polynomials in a graded star algebra, identity checks and
// rank oracles for codimensions.
//
// Completeness of the finite checks: a multilinear polynomial vanishes on the
// whole algebra iff it vanishes when each variable runs over a basis of its
// homogeneous (or symmetric / skew) component.

#include "gradstar/freealg.hpp"
#include "gradstar/utalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gradstar {

using Substitution = std::map<Variable, UTMatrix>;

// Throws PreconditionError for unassigned variables or images outside the
// component of the variable.
UTMatrix evaluate(const Polynomial& p, const Substitution& s, const GradedStarAlgebra& alg);

// p must be multilinear.
bool is_identity(const Polynomial& p, const GradedStarAlgebra& alg);
// Depth first search that stops at the first nonzero product.
bool monomial_is_identity(const Monomial& mono, const GradedStarAlgebra& alg);

// For a monomial of length > 1 in free letters of non-neutral degree on a
// finest grading: the only elementary substitution with a nonzero value, or
// nullopt when the monomial is an identity. Throws LemmaViolation if two exist.
std::optional<Substitution> unique_substitution(const Monomial& mono, const GradedStarAlgebra& alg);

enum class VariableModel {
    // Free letters with star choices: n! 2^n words per assignment of degrees.
    free,
    // Symmetric and skew letters: n! words per assignment of (degree, sign).
    symskew,
};

std::string to_string(VariableModel m);
VariableModel parse_variable_model(const std::string& s);

// Default cell budget: GRADSTAR_BUDGET if set, else 20 million.
std::uint64_t default_budget();

struct OracleOptions {
    std::uint64_t budget = default_budget();
    int workers = 1;
    VariableModel model = VariableModel::symskew;
};

struct BlockRecord {
    Assignment degrees;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    // Number of ordered assignments sharing this sorted one.
    Integer multiplicity = 1;
};

struct Discrepancy {
    std::string what;
    std::string expected;
    std::string actual;
};

struct CodimReport {
    std::string algebra;
    int n = 0;
    Integer value = 0;
    std::string method = "rank-oracle";
    std::vector<BlockRecord> blocks;
    std::vector<Discrepancy> discrepancies;
};

// Sorted assignments of the universe to n indices with their multiplicities.
// Free model: support degrees. Symskew model: (degree, sign) with a nonzero eigenspace.
std::vector<std::pair<Assignment, Integer>> sorted_assignments(const GradedStarAlgebra& alg, int n, VariableModel model);

CodimReport codimension(const GradedStarAlgebra& alg, int n, const OracleOptions& opts = {});
// Restricted to an explicit degree universe (degrees outside the support add nothing).
CodimReport codimension(const GradedStarAlgebra& alg, int n, const std::vector<GroupElement>& universe,
                        const OracleOptions& opts = {});
// Rank of the evaluation matrix of one assignment.
BlockRecord codimension_block(const GradedStarAlgebra& alg, const Assignment& a, std::uint64_t budget = default_budget());

// Dimension of proper polynomials modulo identities; needs the group Z_2.
CodimReport proper_codimension(const GradedStarAlgebra& alg, int n, const OracleOptions& opts = {});

struct GammaRelation {
    bool holds = true;
    std::vector<Integer> c;
    std::vector<Integer> gamma;
    // sum_i C(n,i) gamma_i for each n.
    std::vector<Integer> binomial_sum;
};

GammaRelation codim_gamma_relation(const GradedStarAlgebra& alg, int n_max, const OracleOptions& opts = {});

struct CertificateBlock {
    Assignment degrees;
    std::size_t space_dim = 0;
    std::size_t eval_rank = 0;
    std::size_t consequence_rank = 0;
    std::size_t consequences = 0;
    bool kernel_containment = true;
    bool verified = true;
};

struct BasisCertificate {
    bool verified = true;
    std::vector<CertificateBlock> blocks;
    // A kernel element outside the consequence span, or a consequence that is
    // not an identity, for the first failing block.
    std::optional<Polynomial> counterexample;
    std::string note;
};

BasisCertificate basis_certificate(const std::vector<Polynomial>& S, const GradedStarAlgebra& alg,
                                   const Assignment& assignment, std::uint64_t budget = default_budget());
// Every sorted assignment of degree n in the given model.
BasisCertificate basis_certificate(const std::vector<Polynomial>& S, const GradedStarAlgebra& alg, int n,
                                   const OracleOptions& opts = {});

struct RootReport {
    int n = 0;
    Integer c = 0;
    // c^{1/n} rounded to 6 decimals, half to even.
    Rational root;
    std::string decimal;
    // True when c^{1/n} has at most 7 decimals, so the rounding is exact.
    bool exact = false;
};

// floor(10^digits * c^{1/n}) and whether the root is exact at that scale.
std::pair<Integer, bool> scaled_root(const Integer& c, int n, int digits);
RootReport nth_root_report(const Integer& c, int n);

// Limit of c_n^{1/n} predicted for the finest gradings and the Z_2 grading
// of UT_3; nullopt for other algebras.
std::optional<int> predicted_exponent(const GradedStarAlgebra& alg);

std::vector<RootReport> exponent_estimate(const GradedStarAlgebra& alg, int n_max, const OracleOptions& opts = {});

Integer binomial(int n, int k);
Integer factorial(int n);

} // namespace gradstar
