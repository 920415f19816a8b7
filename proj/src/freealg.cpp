#include "gradstar/freealg.hpp"

#include "gradstar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace gradstar {

std::string to_string(Symmetry s)
{
    switch (s) {
    case Symmetry::free:
        return "free";
    case Symmetry::symmetric:
        return "symmetric";
    case Symmetry::skew:
        return "skew";
    }
    return "?";
}

bool operator<(const Variable& a, const Variable& b)
{
    if (a.index != b.index)
        return a.index < b.index;
    if (a.degree.coords() != b.degree.coords())
        return a.degree.coords() < b.degree.coords();
    return a.symmetry < b.symmetry;
}

namespace {

bool is_z2(const AbelianGroup& g) { return g.moduli() == std::vector<std::int64_t>{2}; }

std::string coords_text(const GroupElement& g)
{
    std::string s;
    for (auto c : g.coords())
        s += "," + std::to_string(c);
    return s;
}

} // namespace

std::string Variable::to_string() const
{
    const std::string idx = std::to_string(index);
    if (symmetry != Symmetry::free && is_z2(degree.group())) {
        std::string s(1, degree[0] == 0 ? 'y' : 'z');
        s += symmetry == Symmetry::symmetric ? '+' : '-';
        return s + "[" + idx + "]";
    }
    std::string s = "x";
    if (symmetry == Symmetry::symmetric)
        s += '+';
    else if (symmetry == Symmetry::skew)
        s += '-';
    return s + "[" + idx + coords_text(degree) + "]";
}

bool operator<(const Letter& a, const Letter& b)
{
    if (a.var.index != b.var.index)
        return a.var.index < b.var.index;
    if (a.starred != b.starred)
        return a.starred < b.starred;
    return a.var < b.var;
}

std::string Letter::to_string() const
{
    std::string s = var.to_string();
    if (starred)
        s.insert(1, "*");
    return s;
}

GroupElement Monomial::degree(const AbelianGroup& group) const
{
    GroupElement d = group.zero();
    for (const auto& l : letters_)
        d = d + l.var.degree;
    return d;
}

bool Monomial::is_multilinear() const
{
    auto vars = variables();
    return vars.size() == letters_.size();
}

std::vector<Variable> Monomial::variables() const
{
    std::vector<Variable> v;
    for (const auto& l : letters_)
        v.push_back(l.var);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    std::vector<Letter> l(letters_);
    l.insert(l.end(), o.letters_.begin(), o.letters_.end());
    return Monomial(std::move(l));
}

std::string Monomial::to_string() const
{
    if (letters_.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i)
            s += ' ';
        s += letters_[i].to_string();
    }
    return s;
}

Polynomial Polynomial::constant(const Rational& c)
{
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(const Variable& v, bool starred) { return word({Letter{v, starred}}); }

Polynomial Polynomial::word(const std::vector<Letter>& letters, const Rational& coeff)
{
    Rational c = coeff;
    std::vector<Letter> norm(letters);
    for (auto& l : norm) {
        if (l.var.symmetry == Symmetry::free || !l.starred)
            continue;
        l.starred = false;
        if (l.var.symmetry == Symmetry::skew)
            c = -c;
    }
    Polynomial p;
    p.add_term(Monomial(std::move(norm)), c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial p(*this);
    return p += o;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial p(*this);
    return p -= o;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial p;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            p.add_term(m1 * m2, c1 * c2);
    return p;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    Polynomial p;
    if (c == 0)
        return p;
    for (const auto& [m, a] : terms_)
        p.terms_.emplace(m, a * c);
    return p;
}

std::vector<Variable> Polynomial::variables() const
{
    std::vector<Variable> v;
    for (const auto& [m, c] : terms_)
        for (const auto& l : m.letters())
            v.push_back(l.var);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool Polynomial::is_multilinear() const
{
    const auto vars = variables();
    for (const auto& [m, c] : terms_)
        if (m.length() != vars.size() || !m.is_multilinear())
            return false;
    return true;
}

Polynomial Polynomial::primitive() const
{
    if (terms_.empty())
        return *this;
    Integer l = 1, g = 0;
    for (const auto& [m, c] : terms_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : terms_) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (terms_.begin()->second < 0)
        scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = abs(c);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (a != 1 || m.empty()) {
            s += a.get_str();
            if (!m.empty())
                s += ' ';
        }
        if (!m.empty())
            s += m.to_string();
    }
    return s;
}

Polynomial poly_star(const Polynomial& p)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Letter> rev(m.letters().rbegin(), m.letters().rend());
        Rational coeff = c;
        for (auto& l : rev) {
            if (l.var.symmetry == Symmetry::free)
                l.starred = !l.starred;
            else if (l.var.symmetry == Symmetry::skew)
                coeff = -coeff;
        }
        out.add_term(Monomial(std::move(rev)), coeff);
    }
    return out;
}

Polynomial commutator(const Polynomial& p, const Polynomial& q) { return p * q - q * p; }

Polynomial left_normed(const std::vector<Polynomial>& args)
{
    if (args.size() < 2)
        throw PreconditionError("a left-normed commutator needs at least two entries");
    Polynomial acc = commutator(args[0], args[1]);
    for (std::size_t i = 2; i < args.size(); ++i)
        acc = commutator(acc, args[i]);
    return acc;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(std::string_view text, const AbelianGroup& group) : s_(text), group_(group) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Polynomial expr()
    {
        Polynomial acc;
        bool first = true;
        while (true) {
            char c = peek();
            bool neg = false;
            if (c == '+' || c == '-') {
                neg = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Polynomial t = term();
            acc += neg ? -t : t;
            first = false;
        }
        return acc;
    }

    static bool starts_item(char c)
    {
        return c == 'x' || c == 'y' || c == 'z' || c == '[' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Polynomial term()
    {
        if (!starts_item(peek()))
            fail("expected a term");
        Polynomial acc = item();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                if (!starts_item(peek()))
                    fail("expected a factor after '*'");
                acc = acc * item();
            } else if (starts_item(c)) {
                acc = acc * item();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial item()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(number());
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (c == '[') {
            ++pos_;
            std::vector<Polynomial> args{expr()};
            while (peek() == ',') {
                ++pos_;
                args.push_back(expr());
            }
            expect(']');
            if (args.size() < 2)
                fail("a commutator needs at least two entries");
            return left_normed(args);
        }
        return letter();
    }

    Rational number()
    {
        Integer num = integer();
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            den = integer();
            if (den == 0)
                fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Integer integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::int64_t signed_int()
    {
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
        }
        Integer v = integer();
        if (!v.fits_slong_p())
            fail("integer out of range");
        return neg ? -v.get_si() : v.get_si();
    }

    std::vector<std::int64_t> bracket_ints()
    {
        expect('[');
        std::vector<std::int64_t> v{signed_int()};
        while (peek() == ',') {
            ++pos_;
            v.push_back(signed_int());
        }
        expect(']');
        return v;
    }

    Polynomial letter()
    {
        const char head = s_[pos_++];
        bool starred = false;
        Symmetry sym = Symmetry::free;
        // Modifiers must be glued to the letter name.
        if (pos_ < s_.size() && s_[pos_] == '*' && head == 'x') {
            starred = true;
            ++pos_;
        }
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            sym = s_[pos_] == '+' ? Symmetry::symmetric : Symmetry::skew;
            ++pos_;
        }
        if (pos_ < s_.size() && s_[pos_] == '*' && head != 'x') {
            starred = true;
            ++pos_;
        }
        if (head != 'x' && sym == Symmetry::free)
            fail("y and z letters need a + or - tag");
        auto ints = bracket_ints();
        if (ints[0] <= 0)
            fail("variable indices start at 1");
        Variable v;
        v.index = static_cast<int>(ints[0]);
        v.symmetry = sym;
        if (head == 'x') {
            ints.erase(ints.begin());
            v.degree = group_.element(std::move(ints));
        } else {
            if (!is_z2(group_))
                fail("y and z letters need the group Z_2");
            if (ints.size() != 1)
                fail("y and z letters take only an index");
            v.degree = group_.element({head == 'y' ? 0 : 1});
        }
        return Polynomial::variable(v, starred);
    }

    std::string_view s_;
    const AbelianGroup& group_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const AbelianGroup& group) { return Parser(text, group).parse(); }

// ------------------------------------------------------ multilinear space

Variable variable_of(const Assignment& a, int index)
{
    if (index < 1 || index > static_cast<int>(a.size()))
        throw StructuralError("variable index " + std::to_string(index) + " outside the assignment");
    const auto& spec = a[static_cast<std::size_t>(index - 1)];
    return Variable{index, spec.degree, spec.symmetry};
}

namespace {

constexpr int kMaxLetters = 12;

std::vector<std::vector<std::uint8_t>> all_words(const Assignment& a)
{
    const int n = static_cast<int>(a.size());
    if (n > kMaxLetters)
        throw PreconditionError("multilinear spaces are limited to " + std::to_string(kMaxLetters) + " letters");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint8_t>> out;
    do {
        std::vector<int> free_pos;
        for (int i = 0; i < n; ++i)
            if (a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].symmetry == Symmetry::free)
                free_pos.push_back(i);
        for (std::uint32_t mask = 0; mask < (1u << free_pos.size()); ++mask) {
            std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(i)] * 2);
            for (std::size_t b = 0; b < free_pos.size(); ++b)
                if (mask >> b & 1u)
                    w[static_cast<std::size_t>(free_pos[b])] |= 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Monomial> multilinear_space(const Assignment& assignment)
{
    MultilinearSpace space(assignment);
    std::vector<Monomial> out;
    out.reserve(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i)
        out.push_back(space.monomial(i));
    return out;
}

MultilinearSpace::MultilinearSpace(Assignment assignment) : assignment_(std::move(assignment))
{
    words_ = all_words(assignment_);
    index_.reserve(words_.size() * 2);
    for (std::size_t i = 0; i < words_.size(); ++i)
        index_.emplace(key(words_[i]), i);
}

std::uint64_t MultilinearSpace::key(const std::vector<std::uint8_t>& word)
{
    std::uint64_t k = word.size();
    for (auto c : word)
        k = (k << 5) | c;
    return k;
}

Monomial MultilinearSpace::monomial(std::size_t i) const
{
    std::vector<Letter> letters;
    for (auto c : words_.at(i))
        letters.push_back(Letter{variable_of(assignment_, c / 2 + 1), (c & 1) != 0});
    return Monomial(std::move(letters));
}

long MultilinearSpace::find(const std::vector<std::uint8_t>& word) const
{
    if (word.size() != assignment_.size())
        return -1;
    auto it = index_.find(key(word));
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Rational> MultilinearSpace::coordinates(const Polynomial& p) const
{
    std::vector<Rational> out(dim());
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint8_t> w;
        for (const auto& l : m.letters()) {
            const auto& v = l.var;
            if (v.index < 1 || v.index > n() || !(variable_of(assignment_, v.index) == v))
                throw StructuralError("letter " + l.to_string() + " is not part of the multilinear space");
            w.push_back(static_cast<std::uint8_t>((v.index - 1) * 2 + (l.starred ? 1 : 0)));
        }
        const long pos = find(w);
        if (pos < 0)
            throw StructuralError("monomial " + m.to_string() + " is not in the multilinear space");
        out[static_cast<std::size_t>(pos)] += c;
    }
    return out;
}

Polynomial MultilinearSpace::polynomial(const std::vector<Rational>& coords) const
{
    Polynomial p;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            p.add_term(monomial(i), coords[i]);
    return p;
}

Polynomial MultilinearSpace::polynomial(const linalg::IntRow& coords) const
{
    Polynomial p;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            p.add_term(monomial(i), Rational(static_cast<long>(coords[i])));
    return p;
}

// ------------------------------------------------------ proper polynomials

namespace {

bool neutral_symmetric(const VarSpec& s) { return s.symmetry == Symmetry::symmetric && s.degree.is_zero(); }

// Every sequence of ordered blocks (size >= 2) covering `rest`, as commutator products.
void commutator_products(const Assignment& a, std::vector<int> rest, const Polynomial& prefix,
                         std::vector<Polynomial>& out)
{
    if (rest.empty()) {
        out.push_back(prefix);
        return;
    }
    if (rest.size() == 1)
        return;
    // Choose the first block as an ordered arrangement of a subset of size >= 2.
    const std::size_t r = rest.size();
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        if (__builtin_popcount(mask) < 2)
            continue;
        std::vector<int> block, remaining;
        for (std::size_t i = 0; i < r; ++i)
            (mask >> i & 1u ? block : remaining).push_back(rest[i]);
        if (remaining.size() == 1)
            continue;
        std::sort(block.begin(), block.end());
        do {
            std::vector<Polynomial> args;
            for (int idx : block)
                args.push_back(Polynomial::variable(variable_of(a, idx)));
            commutator_products(a, remaining, prefix * left_normed(args), out);
        } while (std::next_permutation(block.begin(), block.end()));
    }
}

} // namespace

std::vector<Polynomial> proper_basis(const Assignment& assignment)
{
    for (const auto& s : assignment)
        if (s.symmetry == Symmetry::free)
            throw PreconditionError("proper polynomials are defined for symmetric/skew tagged variables only");
    const int n = static_cast<int>(assignment.size());
    std::vector<int> word_candidates;
    for (int i = 1; i <= n; ++i)
        if (!neutral_symmetric(assignment[static_cast<std::size_t>(i - 1)]))
            word_candidates.push_back(i);

    std::vector<Polynomial> raw;
    const std::size_t c = word_candidates.size();
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        std::vector<int> word, rest;
        for (std::size_t i = 0; i < c; ++i)
            if (mask >> i & 1u)
                word.push_back(word_candidates[i]);
        for (int i = 1; i <= n; ++i)
            if (std::find(word.begin(), word.end(), i) == word.end())
                rest.push_back(i);
        if (rest.size() == 1)
            continue;
        do {
            Polynomial w = Polynomial::constant(1);
            for (int idx : word)
                w = w * Polynomial::variable(variable_of(assignment, idx));
            commutator_products(assignment, rest, w, raw);
        } while (std::next_permutation(word.begin(), word.end()));
    }

    std::set<std::string> seen;
    std::vector<Polynomial> out;
    for (auto& p : raw) {
        if (p.is_zero())
            continue;
        Polynomial q = p.primitive();
        if (seen.insert(q.to_string()).second)
            out.push_back(std::move(q));
    }
    return out;
}

bool is_proper(const Polynomial& p)
{
    // Split into components by variable set; each must lie in the span of its proper basis.
    std::map<std::vector<Variable>, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) {
        if (!m.is_multilinear())
            throw PreconditionError("is_proper expects each variable at most once per monomial");
        Polynomial t;
        t.add_term(m, c);
        parts[m.variables()] += t;
    }
    for (const auto& [vars, part] : parts) {
        if (part.is_zero() || vars.empty())
            continue;
        Assignment a;
        std::map<Variable, int> rename;
        for (const auto& v : vars) {
            if (v.symmetry == Symmetry::free)
                throw PreconditionError("proper polynomials are defined for symmetric/skew tagged variables only");
            a.push_back(VarSpec{v.degree, v.symmetry});
            rename[v] = static_cast<int>(a.size());
        }
        Polynomial renamed;
        for (const auto& [m, c] : part.terms()) {
            std::vector<Letter> letters;
            for (const auto& l : m.letters())
                letters.push_back(Letter{variable_of(a, rename.at(l.var)), l.starred});
            renamed.add_term(Monomial(std::move(letters)), c);
        }
        MultilinearSpace space(a);
        linalg::EchelonBasis basis(space.dim());
        for (const auto& q : proper_basis(a))
            basis.insert(linalg::to_integer_row(space.coordinates(q)));
        if (!basis.contains(linalg::to_integer_row(space.coordinates(renamed))))
            return false;
    }
    return true;
}

// ------------------------------------------------------ consequences

namespace {

struct SignedWord {
    std::vector<std::uint8_t> word;
    int sign;
};

// Star of a word of letter codes in the target space.
SignedWord star_word(const std::vector<std::uint8_t>& w, const Assignment& a)
{
    SignedWord out{std::vector<std::uint8_t>(w.rbegin(), w.rend()), 1};
    for (auto& c : out.word) {
        const auto sym = a[c / 2].symmetry;
        if (sym == Symmetry::free)
            c ^= 1;
        else if (sym == Symmetry::skew)
            out.sign = -out.sign;
    }
    return out;
}

struct Generator {
    // Terms as (coefficient, sequence of (variable slot, starred)).
    std::vector<std::pair<std::int64_t, std::vector<std::pair<int, bool>>>> terms;
    std::vector<Variable> vars;
};

Generator compile(const Polynomial& f)
{
    Generator g;
    g.vars = f.variables();
    const Polynomial prim = f.primitive();
    for (const auto& [m, c] : prim.terms()) {
        if (!m.is_multilinear())
            throw PreconditionError("consequence generation needs generators without repeated variables: " +
                                    f.to_string());
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw std::overflow_error("generator coefficient too large");
        std::vector<std::pair<int, bool>> seq;
        for (const auto& l : m.letters()) {
            auto it = std::lower_bound(g.vars.begin(), g.vars.end(), l.var);
            seq.emplace_back(static_cast<int>(it - g.vars.begin()), l.starred);
        }
        g.terms.emplace_back(c.get_num().get_si(), std::move(seq));
    }
    return g;
}

class ConsequenceBuilder {
public:
    ConsequenceBuilder(const MultilinearSpace& space) : space_(space), a_(space.assignment()) {}

    void run(const Generator& g, std::set<linalg::IntRow>& out)
    {
        const int n = space_.n();
        const int k = static_cast<int>(g.vars.size());
        if (k == 0 || k > n)
            return;
        std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> cuts(static_cast<std::size_t>(k + 1));
        do {
            enumerate_cuts(g, perm, cuts, 0, 0, out);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

private:
    // cuts[0] = |u|, cuts[j] = end of segment j (1-based), segments nonempty.
    void enumerate_cuts(const Generator& g, const std::vector<std::uint8_t>& perm, std::vector<int>& cuts, int j,
                        int pos, std::set<linalg::IntRow>& out)
    {
        const int n = space_.n();
        const int k = static_cast<int>(g.vars.size());
        if (j == 0) {
            for (int u = 0; u + k <= n; ++u) {
                cuts[0] = u;
                enumerate_cuts(g, perm, cuts, 1, u, out);
            }
            return;
        }
        if (j > k) {
            emit(g, perm, cuts, out);
            return;
        }
        const int remaining_after = k - j;
        for (int end = pos + 1; end + remaining_after <= n; ++end) {
            GroupElement d = g.vars[static_cast<std::size_t>(j - 1)].degree.group().zero();
            for (int p = pos; p < end; ++p)
                d = d + a_[perm[static_cast<std::size_t>(p)]].degree;
            if (!(d == g.vars[static_cast<std::size_t>(j - 1)].degree))
                continue;
            cuts[static_cast<std::size_t>(j)] = end;
            enumerate_cuts(g, perm, cuts, j + 1, end, out);
        }
    }

    void emit(const Generator& g, const std::vector<std::uint8_t>& perm, const std::vector<int>& cuts,
              std::set<linalg::IntRow>& out)
    {
        const int n = space_.n();
        std::vector<int> free_pos;
        for (int p = 0; p < n; ++p)
            if (a_[perm[static_cast<std::size_t>(p)]].symmetry == Symmetry::free)
                free_pos.push_back(p);
        const int k = static_cast<int>(g.vars.size());
        const int last = cuts[static_cast<std::size_t>(k)];
        for (std::uint32_t mask = 0; mask < (1u << free_pos.size()); ++mask) {
            std::vector<std::uint8_t> letters(static_cast<std::size_t>(n));
            for (int p = 0; p < n; ++p)
                letters[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(p)] * 2);
            for (std::size_t b = 0; b < free_pos.size(); ++b)
                if (mask >> b & 1u)
                    letters[static_cast<std::size_t>(free_pos[b])] |= 1;

            const std::vector<std::uint8_t> u(letters.begin(), letters.begin() + cuts[0]);
            const std::vector<std::uint8_t> v(letters.begin() + last, letters.end());
            // Images of the generator's variables: lists of signed words.
            std::vector<std::vector<SignedWord>> plain(static_cast<std::size_t>(k)), starred(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) {
                std::vector<std::uint8_t> w(letters.begin() + cuts[static_cast<std::size_t>(j)],
                                            letters.begin() + cuts[static_cast<std::size_t>(j + 1)]);
                SignedWord ws = star_word(w, a_);
                const auto sym = g.vars[static_cast<std::size_t>(j)].symmetry;
                auto& P = plain[static_cast<std::size_t>(j)];
                auto& S = starred[static_cast<std::size_t>(j)];
                if (sym == Symmetry::free) {
                    P = {SignedWord{w, 1}};
                    S = {ws};
                } else {
                    const int t = sym == Symmetry::symmetric ? 1 : -1;
                    P = {SignedWord{w, 1}, SignedWord{ws.word, t * ws.sign}};
                    // The image is symmetric or skew, so its star is t times itself.
                    S = {SignedWord{w, t}, SignedWord{ws.word, ws.sign}};
                }
            }
            linalg::IntRow row(space_.dim(), 0);
            bool nonzero = false;
            for (const auto& [coeff, seq] : g.terms) {
                std::vector<std::pair<std::vector<std::uint8_t>, std::int64_t>> acc{{u, coeff}};
                for (const auto& [slot, st] : seq) {
                    const auto& opts = st ? starred[static_cast<std::size_t>(slot)] : plain[static_cast<std::size_t>(slot)];
                    std::vector<std::pair<std::vector<std::uint8_t>, std::int64_t>> next;
                    for (const auto& [pre, c] : acc)
                        for (const auto& o : opts) {
                            auto w = pre;
                            w.insert(w.end(), o.word.begin(), o.word.end());
                            next.emplace_back(std::move(w), c * o.sign);
                        }
                    acc = std::move(next);
                }
                for (auto& [w, c] : acc) {
                    w.insert(w.end(), v.begin(), v.end());
                    const long pos = space_.find(w);
                    if (pos < 0)
                        continue;
                    row[static_cast<std::size_t>(pos)] += c;
                }
            }
            for (auto x : row)
                if (x != 0) {
                    nonzero = true;
                    break;
                }
            if (!nonzero)
                continue;
            out.insert(normalise(std::move(row)));
        }
    }

    static linalg::IntRow normalise(linalg::IntRow row)
    {
        std::int64_t g = 0;
        std::int64_t lead = 0;
        for (auto x : row) {
            g = std::gcd(g, x < 0 ? -x : x);
            if (lead == 0)
                lead = x;
        }
        const std::int64_t s = lead < 0 ? -g : g;
        for (auto& x : row)
            x /= s;
        return row;
    }

    const MultilinearSpace& space_;
    const Assignment& a_;
};

} // namespace

std::vector<linalg::IntRow> consequence_rows(const std::vector<Polynomial>& S, const MultilinearSpace& space)
{
    std::vector<Generator> gens;
    for (const auto& f : S) {
        if (f.is_zero())
            continue;
        gens.push_back(compile(f));
        gens.push_back(compile(poly_star(f)));
    }
    std::set<linalg::IntRow> rows;
    ConsequenceBuilder b(space);
    for (const auto& g : gens)
        b.run(g, rows);
    return {rows.begin(), rows.end()};
}

std::vector<Polynomial> multilinear_consequences(const std::vector<Polynomial>& S, const Assignment& assignment)
{
    MultilinearSpace space(assignment);
    std::vector<Polynomial> out;
    for (const auto& row : consequence_rows(S, space))
        out.push_back(space.polynomial(row));
    return out;
}

} // namespace gradstar
