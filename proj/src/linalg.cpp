#include "gradstar/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gradstar::linalg {

namespace {

struct Overflow {};

struct I64 {
    using T = std::int64_t;
    static T from(std::int64_t x) { return x; }
    static bool is_zero(T a) { return a == 0; }
    static bool is_neg(T a) { return a < 0; }
    static T mul(T a, T b)
    {
        T r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static T sub(T a, T b)
    {
        T r;
        if (__builtin_sub_overflow(a, b, &r))
            throw Overflow{};
        return r;
    }
    static T neg(T a)
    {
        if (a == INT64_MIN)
            throw Overflow{};
        return -a;
    }
    static T gcd(T a, T b) { return std::gcd(neg_abs(a), neg_abs(b)); }
    static T div(T a, T b) { return a / b; }

private:
    static T neg_abs(T a)
    {
        if (a == INT64_MIN)
            throw Overflow{};
        return a < 0 ? -a : a;
    }
};

struct Big {
    using T = Integer;
    static T from(std::int64_t x) { return T(static_cast<long>(x)); }
    static bool is_zero(const T& a) { return sgn(a) == 0; }
    static bool is_neg(const T& a) { return sgn(a) < 0; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T neg(const T& a) { return -a; }
    static T gcd(const T& a, const T& b)
    {
        T g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static T div(const T& a, const T& b)
    {
        T q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

template <class Ops>
class Echelon {
public:
    using T = typename Ops::T;
    using Row = std::vector<T>;

    explicit Echelon(std::size_t cols) : pivot_of_col_(cols, -1) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces v in place. Returns the first column where no pivot exists and
    // v is nonzero, or cols when v reduced to zero.
    std::size_t reduce(Row& v) const
    {
        const std::size_t cols = pivot_of_col_.size();
        for (std::size_t c = 0; c < cols; ++c) {
            if (Ops::is_zero(v[c]))
                continue;
            const int r = pivot_of_col_[c];
            if (r < 0)
                return c;
            const Row& b = rows_[static_cast<std::size_t>(r)];
            const T g = Ops::gcd(b[c], v[c]);
            const T fv = Ops::div(b[c], g);
            const T fb = Ops::div(v[c], g);
            for (std::size_t k = c; k < cols; ++k) {
                if (Ops::is_zero(b[k])) {
                    if (!Ops::is_zero(v[k]))
                        v[k] = Ops::mul(fv, v[k]);
                    continue;
                }
                v[k] = Ops::sub(Ops::mul(fv, v[k]), Ops::mul(fb, b[k]));
            }
            make_primitive(v, c);
        }
        return cols;
    }

    bool insert(Row v)
    {
        const std::size_t c = reduce(v);
        if (c == pivot_of_col_.size())
            return false;
        make_primitive(v, c);
        if (Ops::is_neg(v[c]))
            for (std::size_t k = c; k < v.size(); ++k)
                v[k] = Ops::neg(v[k]);
        pivot_of_col_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(Row v) const { return reduce(v) == pivot_of_col_.size(); }

    const std::vector<Row>& rows() const { return rows_; }

private:
    static void make_primitive(Row& v, std::size_t from)
    {
        T g = Ops::from(0);
        for (std::size_t k = from; k < v.size(); ++k)
            if (!Ops::is_zero(v[k])) {
                g = Ops::gcd(g, v[k]);
                if (g == Ops::from(1))
                    return;
            }
        if (Ops::is_zero(g))
            return;
        for (std::size_t k = from; k < v.size(); ++k)
            if (!Ops::is_zero(v[k]))
                v[k] = Ops::div(v[k], g);
    }

    std::vector<Row> rows_;
    std::vector<int> pivot_of_col_;
};

template <class Ops>
std::vector<typename Ops::T> convert(const IntRow& row)
{
    std::vector<typename Ops::T> out;
    out.reserve(row.size());
    for (auto x : row)
        out.push_back(Ops::from(x));
    return out;
}

template <class Ops>
std::size_t rank_with(const std::vector<IntRow>& rows, std::size_t cols)
{
    Echelon<Ops> e(cols);
    for (const auto& r : rows) {
        e.insert(convert<Ops>(r));
        if (e.rank() == cols)
            break;
    }
    return e.rank();
}

std::size_t width(const std::vector<IntRow>& rows) { return rows.empty() ? 0 : rows.front().size(); }

} // namespace

std::vector<IntRow> compress(const std::vector<IntRow>& rows)
{
    if (rows.empty())
        return {};
    const std::size_t cols = width(rows);
    std::vector<char> used(cols, 0);
    std::set<IntRow> seen;
    std::vector<IntRow> kept;
    for (const auto& r : rows) {
        auto first = std::find_if(r.begin(), r.end(), [](std::int64_t x) { return x != 0; });
        if (first == r.end())
            continue;
        // Normalise sign and content so that scalar multiples collapse.
        std::int64_t g = 0;
        for (auto x : r)
            g = std::gcd(g, x < 0 ? -x : x);
        IntRow n(r);
        const std::int64_t s = *first < 0 ? -g : g;
        for (auto& x : n)
            x /= s;
        if (!seen.insert(n).second)
            continue;
        for (std::size_t c = 0; c < cols; ++c)
            if (n[c] != 0)
                used[c] = 1;
        kept.push_back(std::move(n));
    }
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < cols; ++c)
        if (used[c])
            live.push_back(c);
    if (live.size() == cols)
        return kept;
    for (auto& r : kept) {
        IntRow n;
        n.reserve(live.size());
        for (auto c : live)
            n.push_back(r[c]);
        r = std::move(n);
    }
    return kept;
}

std::size_t exact_rank(const std::vector<IntRow>& rows)
{
    const auto reduced = compress(rows);
    if (reduced.empty())
        return 0;
    try {
        return rank_with<I64>(reduced, width(reduced));
    } catch (const Overflow&) {
        return rank_with<Big>(reduced, width(reduced));
    }
}

std::size_t exact_rank_gmp(const std::vector<IntRow>& rows)
{
    if (rows.empty())
        return 0;
    return rank_with<Big>(rows, width(rows));
}

struct EchelonBasis::Impl {
    explicit Impl(std::size_t cols) : small(cols), big(cols) {}
    bool use_big = false;
    Echelon<I64> small;
    Echelon<Big> big;

    void promote()
    {
        for (const auto& r : small.rows()) {
            std::vector<Integer> b;
            b.reserve(r.size());
            for (auto x : r)
                b.push_back(Big::from(x));
            big.insert(std::move(b));
        }
        use_big = true;
    }
};

EchelonBasis::EchelonBasis(std::size_t cols) : cols_(cols), impl_(std::make_unique<Impl>(cols)) {}
EchelonBasis::~EchelonBasis() = default;
EchelonBasis::EchelonBasis(EchelonBasis&&) noexcept = default;
EchelonBasis& EchelonBasis::operator=(EchelonBasis&&) noexcept = default;

bool EchelonBasis::insert(const IntRow& row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("row width does not match the echelon basis");
    if (!impl_->use_big) {
        try {
            return impl_->small.insert(row);
        } catch (const Overflow&) {
            impl_->promote();
        }
    }
    return impl_->big.insert(convert<Big>(row));
}

bool EchelonBasis::contains(const IntRow& row) const
{
    if (row.size() != cols_)
        throw std::invalid_argument("row width does not match the echelon basis");
    if (!impl_->use_big) {
        try {
            return impl_->small.contains(row);
        } catch (const Overflow&) {
            impl_->promote();
        }
    }
    return impl_->big.contains(convert<Big>(row));
}

std::size_t EchelonBasis::rank() const { return impl_->use_big ? impl_->big.rank() : impl_->small.rank(); }

std::vector<std::vector<Rational>> left_kernel(const std::vector<IntRow>& rows, std::size_t cols)
{
    // Solve A^T c = 0 by reduced row echelon form over Q.
    const std::size_t n = rows.size();
    std::vector<std::vector<Rational>> a(cols, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[j][i] = Rational(static_cast<long>(rows[i][j]));

    std::vector<int> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < cols; ++c) {
        std::size_t p = r;
        while (p < cols && a[p][c] == 0)
            ++p;
        if (p == cols)
            continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < cols; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < n; ++k)
                a[i][k] -= f * a[r][k];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col_of_row)
        is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[static_cast<std::size_t>(pivot_col_of_row[i])] = -a[i][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

IntRow to_integer_row(const std::vector<Rational>& row)
{
    Integer l = 1;
    for (const auto& q : row)
        if (q != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> z;
    z.reserve(row.size());
    Integer g = 0;
    for (const auto& q : row) {
        Integer v = Integer(q.get_num()) * (l / Integer(q.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    IntRow out;
    out.reserve(z.size());
    for (auto& v : z) {
        if (g > 1)
            v /= g;
        if (!v.fits_slong_p())
            throw std::overflow_error("coefficient does not fit in 64 bits");
        out.push_back(v.get_si());
    }
    return out;
}

} // namespace gradstar::linalg
