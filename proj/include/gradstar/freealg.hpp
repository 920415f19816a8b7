#pragma once

// Free graded algebra with involution: starred graded indeterminates,
// optional symmetric / skew tags, words and rational polynomials.

#include "gradstar/abgroup.hpp"
#include "gradstar/linalg.hpp"
#include "gradstar/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gradstar {

enum class Symmetry { free, symmetric, skew };

std::string to_string(Symmetry s);

struct Variable {
    int index = 0;
    GroupElement degree;
    Symmetry symmetry = Symmetry::free;

    friend bool operator==(const Variable& a, const Variable& b)
    {
        return a.index == b.index && a.symmetry == b.symmetry && a.degree == b.degree;
    }
    friend bool operator<(const Variable& a, const Variable& b);

    // x[1,(0)], y+[2], z-[3] for Z_2 tags.
    std::string to_string() const;
};

struct Letter {
    Variable var;
    // Always false on tagged variables.
    bool starred = false;

    friend bool operator==(const Letter& a, const Letter& b) { return a.starred == b.starred && a.var == b.var; }
    friend bool operator<(const Letter& a, const Letter& b);

    std::string to_string() const;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Sum of letter degrees; the empty word has the neutral degree of `group`.
    GroupElement degree(const AbelianGroup& group) const;
    // Every variable occurs at most once.
    bool is_multilinear() const;
    std::vector<Variable> variables() const;

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.letters_ == b.letters_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.letters_ < b.letters_; }

    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial variable(const Variable& v, bool starred = false);
    // Normalises stars on tagged letters into signs.
    static Polynomial word(const std::vector<Letter>& letters, const Rational& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Sorted distinct variables.
    std::vector<Variable> variables() const;
    // Every monomial uses each of its variables once and all use the same set.
    bool is_multilinear() const;

    // Scales to integer coefficients with content 1 and a positive leading term.
    Polynomial primitive() const;

    std::string to_string() const;

private:
    Terms terms_;
};

Polynomial poly_star(const Polynomial& p);
Polynomial commutator(const Polynomial& p, const Polynomial& q);
// [a_1,...,a_n] = [[a_1,...,a_{n-1}],a_n]; needs n >= 2.
Polynomial left_normed(const std::vector<Polynomial>& args);

// Parses the text syntax: x[i,g...], x*[i,g...], y+[i], y-[i], z+[i], z-[i],
// [a,b,...] commutators, parentheses, rational coefficients, + and -.
// y and z need the group Z_2 (degree 0 and 1 respectively).
Polynomial parse_polynomial(std::string_view text, const AbelianGroup& group);

// Degree and tag for each index 1..n of a multilinear space.
struct VarSpec {
    GroupElement degree;
    Symmetry symmetry = Symmetry::free;

    friend bool operator==(const VarSpec& a, const VarSpec& b)
    {
        return a.symmetry == b.symmetry && a.degree == b.degree;
    }
    friend bool operator<(const VarSpec& a, const VarSpec& b)
    {
        if (a.degree.coords() != b.degree.coords())
            return a.degree.coords() < b.degree.coords();
        return a.symmetry < b.symmetry;
    }
};

using Assignment = std::vector<VarSpec>;

Variable variable_of(const Assignment& a, int index);

// All n! * 2^{#free} multilinear words, in canonical order.
std::vector<Monomial> multilinear_space(const Assignment& assignment);

// Coordinates with respect to the canonical monomial basis of a multilinear space.
// Words are keyed compactly (index and star packed in 5 bits per letter).
class MultilinearSpace {
public:
    explicit MultilinearSpace(Assignment assignment);

    const Assignment& assignment() const { return assignment_; }
    int n() const { return static_cast<int>(assignment_.size()); }
    std::size_t dim() const { return words_.size(); }

    // Packed letter codes: (index - 1) * 2 + star, index 1-based.
    const std::vector<std::vector<std::uint8_t>>& words() const { return words_; }
    Monomial monomial(std::size_t i) const;

    // Position of a word given as letter codes; -1 when it is not in the space.
    long find(const std::vector<std::uint8_t>& word) const;

    // Throws StructuralError when a term falls outside the space.
    std::vector<Rational> coordinates(const Polynomial& p) const;
    Polynomial polynomial(const std::vector<Rational>& coords) const;
    Polynomial polynomial(const linalg::IntRow& coords) const;

private:
    static std::uint64_t key(const std::vector<std::uint8_t>& word);

    Assignment assignment_;
    std::vector<std::vector<std::uint8_t>> words_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Spanning set of the proper multilinear polynomials for the assignment:
// w * u_1 ... u_e with w a word in the letters that are not neutral symmetric
// and u_i left-normed commutators of length >= 2 covering the remaining letters
// (including every neutral symmetric one). Requires tagged variables.
std::vector<Polynomial> proper_basis(const Assignment& assignment);
bool is_proper(const Polynomial& p);

// Spanning set of the intersection of the multilinear space with the ideal
// generated by S (closed under graded substitutions and the involution).
// Sorted and free of duplicates; each entry is primitive.
std::vector<Polynomial> multilinear_consequences(const std::vector<Polynomial>& S, const Assignment& assignment);
// The same set as integer coordinate rows over MultilinearSpace(assignment).
std::vector<linalg::IntRow> consequence_rows(const std::vector<Polynomial>& S, const MultilinearSpace& space);

} // namespace gradstar
