#pragma once

// Good monomials for the finest grading: canonical representatives of the
// multilinear space modulo identities, their counts and closed formulas.

#include "gradstar/eval.hpp"
#include "gradstar/freealg.hpp"
#include "gradstar/utalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gradstar {

// Write M = M_1 x_{u_1} M_2 ... M_k x_{u_k} M_{k+1} with neutral blocks M_i.
// Conditions:
//   I   indices ascend inside every block;
//   II  dim A_{g_i} = 1  =>  x_{u_i} unstarred and M_i empty;
//   III dim A_{g_i+...+g_j} = 1 for i < j  =>  M_i empty and u_i < u_j;
//   IV  (odd m) g_i, g_{i+1} unit vectors  =>  M_{i+1} has no stars;
//   V   (odd m) k = 1, g_1 a unit vector  =>  M_1 or M_2 has no stars.
// The symplectic variant uses I-III only.
struct GoodConditions {
    bool ascending = true;
    bool one_dim_letters = true;
    bool one_dim_products = true;
    bool unit_neighbours = true;
    bool single_letter = true;
    bool non_identity = true;

    bool all() const
    {
        return ascending && one_dim_letters && one_dim_products && unit_neighbours && single_letter && non_identity;
    }
};

GoodConditions good_conditions(const Monomial& mono, int m, InvolutionKind kind);
bool is_good(const Monomial& mono, int m, InvolutionKind kind);

struct CountRecord {
    int m = 0;
    int n = 0;
    int k = 0;
    Integer count = 0;
    std::string method;
};

// Calls visit(monomial, k) for every good monomial in the variables x_1..x_n.
// only_k >= 0 restricts to monomials with exactly that many non-neutral letters.
void for_each_good(int m, int n, InvolutionKind kind, const std::function<void(const Monomial&, int)>& visit,
                   int only_k = -1);

// N_k(n) for k = 0..m-1 (entries past only_k stay zero when it is set).
std::vector<Integer> count_good(int m, int n, InvolutionKind kind, int only_k = -1);

struct GoodEnumeration {
    std::vector<Monomial> monomials;
    std::vector<CountRecord> counts;
};

// Throws BudgetExceeded when more than `budget` monomials would be stored.
GoodEnumeration enumerate_good(int m, int n, InvolutionKind kind, std::uint64_t budget = default_budget());

// N_{m-1}(n) as stated with the codimension asymptotics (zero for n < m-1).
Integer closed_count_top(int m, int n);
// N_{m-1}(n) re-derived from conditions I-V, counting the orderings forced
// by condition III.
Integer derived_count_top(int m, int n);

// Multilinear monomials x_{1,g_1}^{d_1} ... x_{k,g_k}^{d_k}, 1 <= k <= up_to_k,
// in non-neutral degrees of the support, that are identities.
std::vector<Monomial> monomial_identities(int m, int up_to_k, InvolutionKind kind = InvolutionKind::reflection);

// Ordered tuples of pairwise disjoint subsets covering an n-set, counted by brute force.
Integer tuple_count(int n, int t);
bool tuple_count_check(int n, int t);

// Right hand side of N_k(n) <= (dim UT_m)^k k! C(n,k) w^{n-k} 2^n with
// w = ceil(m/2), the largest weight of an index chain.
Integer good_upper_bound(int m, int n, int k);

} // namespace gradstar
