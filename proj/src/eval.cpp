#include "gradstar/eval.hpp"

#include "gradstar/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace gradstar {

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::string to_string(VariableModel m) { return m == VariableModel::free ? "free" : "symskew"; }

VariableModel parse_variable_model(const std::string& s)
{
    if (s == "free")
        return VariableModel::free;
    if (s == "symskew")
        return VariableModel::symskew;
    throw ParseError("unknown variable model '" + s + "' (expected free or symskew)");
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("GRADSTAR_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 20'000'000ULL;
}

namespace {

// ------------------------------------------------------------ engine

struct Entry {
    int i;
    int j;
    std::int64_t v;
};
using Sparse = std::vector<Entry>;

Sparse to_sparse(const UTMatrix& a)
{
    Sparse s;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = i; j <= a.size(); ++j) {
            const Rational& q = a(i, j);
            if (q == 0)
                continue;
            if (q.get_den() != 1 || !q.get_num().fits_slong_p())
                throw StructuralError("basis matrices are expected to have small integer entries");
            s.push_back(Entry{i - 1, j - 1, q.get_num().get_si()});
        }
    return s;
}

std::vector<UTMatrix> component_basis(const GradedStarAlgebra& alg, const VarSpec& spec)
{
    switch (spec.symmetry) {
    case Symmetry::free:
        return homogeneous_basis(alg.grading(), spec.degree);
    case Symmetry::symmetric:
        return sym_skew_basis(alg, spec.degree, Sign::plus);
    case Symmetry::skew:
        return sym_skew_basis(alg, spec.degree, Sign::minus);
    }
    return {};
}

void require_group(const GradedStarAlgebra& alg, const GroupElement& g)
{
    if (!(g.group() == alg.grading().group()))
        throw StructuralError("variable degree " + g.to_string() + " lies in " + g.group().to_string() +
                              ", the algebra is graded by " + alg.grading().group().to_string());
}

// Evaluates words of one multilinear space on every basis substitution.
// Column index = substitution offset * positions + position.
class Engine {
public:
    Engine(const GradedStarAlgebra& alg, const Assignment& a) : m_(alg.size()), n_(static_cast<int>(a.size()))
    {
        GroupElement total = alg.grading().group().zero();
        subs_ = 1;
        for (const auto& spec : a) {
            require_group(alg, spec.degree);
            total = total + spec.degree;
            auto basis = component_basis(alg, spec);
            std::vector<Sparse> plain, starred;
            for (const auto& b : basis) {
                plain.push_back(to_sparse(b));
                starred.push_back(to_sparse(alg.involution().apply(b)));
            }
            stride_.push_back(subs_);
            subs_ *= basis.size();
            plain_.push_back(std::move(plain));
            starred_.push_back(std::move(starred));
        }
        positions_ = alg.grading().positions(total);
    }

    std::size_t substitutions() const { return subs_; }
    std::size_t cols() const { return subs_ * positions_.size(); }

    linalg::IntRow word_row(const std::vector<std::uint8_t>& word) const
    {
        linalg::IntRow row(cols(), 0);
        if (row.empty())
            return row;
        std::vector<std::int64_t> p(static_cast<std::size_t>(m_ * m_), 0);
        for (int i = 0; i < m_; ++i)
            p[static_cast<std::size_t>(i * m_ + i)] = 1;
        bool stop = false;
        dfs(word, 0, p, 0, &row, stop);
        return row;
    }

    bool word_nonzero(const std::vector<std::uint8_t>& word) const
    {
        if (cols() == 0)
            return false;
        std::vector<std::int64_t> p(static_cast<std::size_t>(m_ * m_), 0);
        for (int i = 0; i < m_; ++i)
            p[static_cast<std::size_t>(i * m_ + i)] = 1;
        bool found = false;
        dfs(word, 0, p, 0, nullptr, found);
        return found;
    }

private:
    // With row == nullptr the search stops at the first nonzero product.
    void dfs(const std::vector<std::uint8_t>& word, std::size_t t, const std::vector<std::int64_t>& p,
             std::size_t offset, linalg::IntRow* row, bool& found) const
    {
        if (t == word.size()) {
            const std::size_t np = positions_.size();
            for (std::size_t k = 0; k < np; ++k) {
                const auto [a, b] = positions_[k];
                const std::int64_t v = p[static_cast<std::size_t>((a - 1) * m_ + (b - 1))];
                if (v == 0)
                    continue;
                if (!row) {
                    found = true;
                    return;
                }
                (*row)[offset * np + k] = v;
            }
            return;
        }
        const int var = word[t] / 2;
        const bool star = word[t] & 1;
        const auto& mats = star ? starred_[static_cast<std::size_t>(var)] : plain_[static_cast<std::size_t>(var)];
        std::vector<std::int64_t> q(p.size());
        for (std::size_t c = 0; c < mats.size(); ++c) {
            std::fill(q.begin(), q.end(), 0);
            bool any = false;
            for (const auto& e : mats[c])
                for (int r = 0; r <= e.i; ++r) {
                    const std::int64_t x = p[static_cast<std::size_t>(r * m_ + e.i)];
                    if (x == 0)
                        continue;
                    q[static_cast<std::size_t>(r * m_ + e.j)] += x * e.v;
                    any = true;
                }
            if (!any)
                continue;
            dfs(word, t + 1, q, offset + c * stride_[static_cast<std::size_t>(var)], row, found);
            if (found)
                return;
        }
    }

    int m_;
    int n_;
    std::size_t subs_ = 1;
    std::vector<std::size_t> stride_;
    std::vector<std::vector<Sparse>> plain_;
    std::vector<std::vector<Sparse>> starred_;
    std::vector<std::pair<int, int>> positions_;
};

// Renames the variables of p to 1..k in sorted order.
struct Renamed {
    Assignment assignment;
    std::vector<Variable> original;
};

Renamed rename(const std::vector<Variable>& vars)
{
    Renamed r;
    r.original = vars;
    for (const auto& v : vars)
        r.assignment.push_back(VarSpec{v.degree, v.symmetry});
    return r;
}

std::vector<std::uint8_t> word_codes(const Monomial& m, const std::vector<Variable>& vars)
{
    std::vector<std::uint8_t> w;
    for (const auto& l : m.letters()) {
        auto it = std::lower_bound(vars.begin(), vars.end(), l.var);
        w.push_back(static_cast<std::uint8_t>((it - vars.begin()) * 2 + (l.starred ? 1 : 0)));
    }
    return w;
}

void add_scaled(linalg::IntRow& acc, const linalg::IntRow& row, std::int64_t c)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0)
            continue;
        std::int64_t prod, sum;
        if (__builtin_mul_overflow(row[i], c, &prod) || __builtin_add_overflow(acc[i], prod, &sum))
            throw std::overflow_error("evaluation entry exceeds 64 bits");
        acc[i] = sum;
    }
}

bool all_zero(const linalg::IntRow& r)
{
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& fn)
{
    const std::size_t w = std::max(1, workers);
    if (w <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(w, count); ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

void check_budget(std::size_t rows, std::size_t cols, std::uint64_t budget, const std::string& what)
{
    const unsigned __int128 cells = static_cast<unsigned __int128>(rows) * cols;
    if (cells > budget)
        throw BudgetExceeded(what + ": " + std::to_string(rows) + " x " + std::to_string(cols) +
                             " evaluation matrix exceeds the cell budget of " + std::to_string(budget));
}

std::string assignment_text(const Assignment& a)
{
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ",";
        s += a[i].degree.to_string();
        if (a[i].symmetry == Symmetry::symmetric)
            s += "+";
        else if (a[i].symmetry == Symmetry::skew)
            s += "-";
    }
    return s + "]";
}

bool is_z2(const AbelianGroup& g) { return g.moduli() == std::vector<std::int64_t>{2}; }

} // namespace

// ------------------------------------------------------------ evaluation

UTMatrix evaluate(const Polynomial& p, const Substitution& s, const GradedStarAlgebra& alg)
{
    const int m = alg.size();
    for (const auto& v : p.variables()) {
        auto it = s.find(v);
        if (it == s.end())
            throw PreconditionError("no value assigned to " + v.to_string());
        require_group(alg, v.degree);
        const UTMatrix& a = it->second;
        if (a.size() != m)
            throw PreconditionError("value of " + v.to_string() + " has the wrong size");
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j)
                if (a(i, j) != 0 && !(alg.grading().degree(i, j) == v.degree))
                    throw PreconditionError("value of " + v.to_string() + " is not homogeneous of degree " +
                                            v.degree.to_string());
        if (v.symmetry == Symmetry::symmetric && !(alg.involution().apply(a) == a))
            throw PreconditionError("value of " + v.to_string() + " is not symmetric");
        if (v.symmetry == Symmetry::skew && !(alg.involution().apply(a) == -a))
            throw PreconditionError("value of " + v.to_string() + " is not skew");
    }
    UTMatrix out(m);
    for (const auto& [mono, c] : p.terms()) {
        UTMatrix prod = UTMatrix::identity(m);
        for (const auto& l : mono.letters()) {
            const UTMatrix& a = s.at(l.var);
            prod = prod * (l.starred ? alg.involution().apply(a) : a);
        }
        out = out + prod * c;
    }
    return out;
}

bool is_identity(const Polynomial& p, const GradedStarAlgebra& alg)
{
    if (p.is_zero())
        return true;
    if (!p.is_multilinear())
        throw PreconditionError("is_identity expects a multilinear polynomial: " + p.to_string());
    const auto vars = p.variables();
    const Renamed r = rename(vars);
    Engine e(alg, r.assignment);
    const Polynomial prim = p.primitive();
    linalg::IntRow acc(e.cols(), 0);
    for (const auto& [mono, c] : prim.terms())
        add_scaled(acc, e.word_row(word_codes(mono, vars)), c.get_num().get_si());
    return all_zero(acc);
}

bool monomial_is_identity(const Monomial& mono, const GradedStarAlgebra& alg)
{
    if (!mono.is_multilinear())
        throw PreconditionError("monomial_is_identity expects a multilinear monomial: " + mono.to_string());
    const auto vars = mono.variables();
    Engine e(alg, rename(vars).assignment);
    return !e.word_nonzero(word_codes(mono, vars));
}

std::optional<Substitution> unique_substitution(const Monomial& mono, const GradedStarAlgebra& alg)
{
    if (mono.length() <= 1)
        throw PreconditionError("unique_substitution needs a monomial of length > 1");
    if (!mono.is_multilinear())
        throw PreconditionError("unique_substitution needs a multilinear monomial");
    const int m = alg.size();
    if (!same_degree_map(alg.grading(), finest_grading(m)))
        throw PreconditionError("unique_substitution applies to the finest grading only");
    for (const auto& l : mono.letters()) {
        if (l.var.symmetry != Symmetry::free)
            throw PreconditionError("unique_substitution needs free letters");
        if (l.var.degree.is_zero())
            throw PreconditionError("unique_substitution needs letters of non-neutral degree");
    }
    const auto& letters = mono.letters();
    std::vector<std::vector<std::pair<int, int>>> choices;
    for (const auto& l : letters)
        choices.push_back(alg.grading().positions(l.var.degree));

    std::vector<std::vector<std::pair<int, int>>> hits;
    std::vector<std::pair<int, int>> current(letters.size());
    // State: column where the running product ends; 0 before the first letter.
    auto dfs = [&](auto&& self, std::size_t t, int end_col) -> void {
        if (t == letters.size()) {
            hits.push_back(current);
            return;
        }
        for (const auto& [i, j] : choices[t]) {
            int a = i, b = j;
            if (letters[t].starred) {
                const auto img = alg.involution().on_elementary(i, j);
                a = img.i;
                b = img.j;
            }
            if (end_col != 0 && a != end_col)
                continue;
            current[t] = {i, j};
            self(self, t + 1, b);
        }
    };
    dfs(dfs, 0, 0);
    if (hits.empty())
        return std::nullopt;
    if (hits.size() > 1)
        throw LemmaViolation("monomial " + mono.to_string() + " has " + std::to_string(hits.size()) +
                             " nonzero elementary substitutions");
    Substitution s;
    for (std::size_t t = 0; t < letters.size(); ++t)
        s.emplace(letters[t].var, UTMatrix::elementary(m, hits[0][t].first, hits[0][t].second));
    return s;
}

// ------------------------------------------------------------ codimension

std::vector<std::pair<Assignment, Integer>> sorted_assignments(const GradedStarAlgebra& alg, int n, VariableModel model)
{
    std::vector<VarSpec> universe;
    for (const auto& g : alg.grading().support()) {
        if (model == VariableModel::free) {
            universe.push_back(VarSpec{g, Symmetry::free});
            continue;
        }
        if (!sym_skew_basis(alg, g, Sign::plus).empty())
            universe.push_back(VarSpec{g, Symmetry::symmetric});
        if (!sym_skew_basis(alg, g, Sign::minus).empty())
            universe.push_back(VarSpec{g, Symmetry::skew});
    }
    std::vector<std::pair<Assignment, Integer>> out;
    if (universe.empty() && n > 0)
        return out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    const Integer nf = factorial(n);
    while (true) {
        Assignment a;
        for (auto i : pick)
            a.push_back(universe[i]);
        Integer denom = 1;
        for (std::size_t i = 0; i < pick.size();) {
            std::size_t j = i;
            while (j < pick.size() && pick[j] == pick[i])
                ++j;
            denom *= factorial(static_cast<int>(j - i));
            i = j;
        }
        out.emplace_back(std::move(a), nf / denom);
        // Next nondecreasing index tuple.
        int k = n - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] + 1 == universe.size())
            --k;
        if (k < 0)
            break;
        const std::size_t v = pick[static_cast<std::size_t>(k)] + 1;
        for (int t = k; t < n; ++t)
            pick[static_cast<std::size_t>(t)] = v;
    }
    return out;
}

BlockRecord codimension_block(const GradedStarAlgebra& alg, const Assignment& a, std::uint64_t budget)
{
    MultilinearSpace space(a);
    Engine e(alg, a);
    BlockRecord rec;
    rec.degrees = a;
    rec.rows = space.dim();
    rec.cols = e.cols();
    check_budget(rec.rows, rec.cols, budget, "assignment " + assignment_text(a));
    if (rec.cols == 0)
        return rec;
    std::vector<linalg::IntRow> rows;
    rows.reserve(space.dim());
    for (const auto& w : space.words())
        rows.push_back(e.word_row(w));
    rec.rank = linalg::exact_rank(rows);
    return rec;
}

namespace {

CodimReport run_blocks(const GradedStarAlgebra& alg, int n, std::vector<std::pair<Assignment, Integer>> assignments,
                       const OracleOptions& opts,
                       const std::function<BlockRecord(const Assignment&)>& block)
{
    CodimReport rep;
    rep.algebra = alg.describe();
    rep.n = n;
    rep.blocks.resize(assignments.size());
    parallel_for(assignments.size(), opts.workers, [&](std::size_t i) {
        rep.blocks[i] = block(assignments[i].first);
        rep.blocks[i].multiplicity = assignments[i].second;
    });
    for (const auto& b : rep.blocks)
        rep.value += b.multiplicity * static_cast<unsigned long>(b.rank);
    return rep;
}

} // namespace

CodimReport codimension(const GradedStarAlgebra& alg, int n, const OracleOptions& opts)
{
    if (n < 0)
        throw PreconditionError("degree must be non-negative");
    auto rep = run_blocks(alg, n, sorted_assignments(alg, n, opts.model), opts,
                          [&](const Assignment& a) { return codimension_block(alg, a, opts.budget); });
    rep.method = "rank-oracle/" + to_string(opts.model);
    return rep;
}

CodimReport codimension(const GradedStarAlgebra& alg, int n, const std::vector<GroupElement>& universe,
                        const OracleOptions& opts)
{
    if (n < 0)
        throw PreconditionError("degree must be non-negative");
    const auto support = alg.grading().support();
    auto keep = [&](const Assignment& a) {
        for (const auto& s : a)
            if (std::find(universe.begin(), universe.end(), s.degree) == universe.end())
                return false;
        return true;
    };
    for (const auto& g : universe)
        require_group(alg, g);
    std::vector<std::pair<Assignment, Integer>> filtered;
    for (auto& p : sorted_assignments(alg, n, opts.model))
        if (keep(p.first))
            filtered.push_back(std::move(p));
    auto rep = run_blocks(alg, n, std::move(filtered), opts,
                          [&](const Assignment& a) { return codimension_block(alg, a, opts.budget); });
    rep.method = "rank-oracle/" + to_string(opts.model);
    return rep;
}

CodimReport proper_codimension(const GradedStarAlgebra& alg, int n, const OracleOptions& opts)
{
    if (!is_z2(alg.grading().group()))
        throw PreconditionError("proper codimensions are defined for Z_2-graded algebras");
    if (n < 0)
        throw PreconditionError("degree must be non-negative");
    auto rep = run_blocks(alg, n, sorted_assignments(alg, n, VariableModel::symskew), opts, [&](const Assignment& a) {
        MultilinearSpace space(a);
        Engine e(alg, a);
        const auto basis = proper_basis(a);
        BlockRecord rec;
        rec.degrees = a;
        rec.rows = basis.size();
        rec.cols = e.cols();
        check_budget(std::max(rec.rows, space.dim()), rec.cols, opts.budget, "proper assignment " + assignment_text(a));
        if (rec.cols == 0)
            return rec;
        std::vector<linalg::IntRow> mono;
        for (const auto& w : space.words())
            mono.push_back(e.word_row(w));
        std::vector<linalg::IntRow> rows;
        for (const auto& q : basis) {
            const auto coords = linalg::to_integer_row(space.coordinates(q));
            linalg::IntRow acc(rec.cols, 0);
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (coords[i] != 0)
                    add_scaled(acc, mono[i], coords[i]);
            rows.push_back(std::move(acc));
        }
        rec.rank = linalg::exact_rank(rows);
        return rec;
    });
    rep.method = "proper-rank-oracle";
    return rep;
}

GammaRelation codim_gamma_relation(const GradedStarAlgebra& alg, int n_max, const OracleOptions& opts)
{
    GammaRelation out;
    for (int n = 0; n <= n_max; ++n) {
        out.c.push_back(codimension(alg, n, opts).value);
        out.gamma.push_back(proper_codimension(alg, n, opts).value);
    }
    for (int n = 0; n <= n_max; ++n) {
        Integer s = 0;
        for (int i = 0; i <= n; ++i)
            s += binomial(n, i) * out.gamma[static_cast<std::size_t>(i)];
        out.binomial_sum.push_back(s);
        if (s != out.c[static_cast<std::size_t>(n)])
            out.holds = false;
    }
    return out;
}

// ------------------------------------------------------------ certificates

BasisCertificate basis_certificate(const std::vector<Polynomial>& S, const GradedStarAlgebra& alg,
                                   const Assignment& assignment, std::uint64_t budget)
{
    BasisCertificate cert;
    MultilinearSpace space(assignment);
    Engine e(alg, assignment);
    CertificateBlock blk;
    blk.degrees = assignment;
    blk.space_dim = space.dim();
    check_budget(space.dim(), e.cols(), budget, "certificate for " + assignment_text(assignment));

    std::vector<linalg::IntRow> E;
    for (const auto& w : space.words())
        E.push_back(e.word_row(w));
    blk.eval_rank = e.cols() == 0 ? 0 : linalg::exact_rank(E);

    const auto C = consequence_rows(S, space);
    blk.consequences = C.size();
    for (const auto& c : C) {
        linalg::IntRow acc(e.cols(), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0)
                add_scaled(acc, E[i], c[i]);
        if (!all_zero(acc)) {
            blk.kernel_containment = false;
            cert.counterexample = space.polynomial(c);
            cert.note = "a consequence of the generators is not an identity";
            break;
        }
    }
    blk.consequence_rank = linalg::exact_rank(C);
    const std::size_t kernel_dim = space.dim() - blk.eval_rank;
    blk.verified = blk.kernel_containment && blk.consequence_rank == kernel_dim;

    if (blk.kernel_containment && !blk.verified) {
        // Find a kernel vector outside the span of the consequences.
        linalg::EchelonBasis span(space.dim());
        for (const auto& c : C)
            span.insert(c);
        std::vector<linalg::IntRow> cols_unique;
        {
            // The left kernel only depends on the distinct columns.
            std::vector<linalg::IntRow> T(e.cols(), linalg::IntRow(space.dim()));
            for (std::size_t i = 0; i < E.size(); ++i)
                for (std::size_t j = 0; j < E[i].size(); ++j)
                    T[j][i] = E[i][j];
            std::sort(T.begin(), T.end());
            T.erase(std::unique(T.begin(), T.end()), T.end());
            std::vector<linalg::IntRow> back(space.dim(), linalg::IntRow(T.size()));
            for (std::size_t j = 0; j < T.size(); ++j)
                for (std::size_t i = 0; i < space.dim(); ++i)
                    back[i][j] = T[j][i];
            cols_unique = std::move(back);
        }
        const std::size_t ncols = cols_unique.empty() ? 0 : cols_unique.front().size();
        for (const auto& k : linalg::left_kernel(cols_unique, ncols)) {
            const auto row = linalg::to_integer_row(k);
            if (!span.contains(row)) {
                cert.counterexample = space.polynomial(row);
                cert.note = "an identity of the algebra is not a consequence of the generators";
                break;
            }
        }
    }
    cert.verified = blk.verified;
    cert.blocks.push_back(std::move(blk));
    return cert;
}

BasisCertificate basis_certificate(const std::vector<Polynomial>& S, const GradedStarAlgebra& alg, int n,
                                   const OracleOptions& opts)
{
    const auto assignments = sorted_assignments(alg, n, opts.model);
    std::vector<BasisCertificate> parts(assignments.size());
    parallel_for(assignments.size(), opts.workers,
                 [&](std::size_t i) { parts[i] = basis_certificate(S, alg, assignments[i].first, opts.budget); });
    BasisCertificate out;
    for (auto& p : parts) {
        if (!p.verified && out.verified) {
            out.verified = false;
            out.counterexample = p.counterexample;
            out.note = p.note;
        }
        for (auto& b : p.blocks)
            out.blocks.push_back(std::move(b));
    }
    return out;
}

// ------------------------------------------------------------ exponent

std::pair<Integer, bool> scaled_root(const Integer& c, int n, int digits)
{
    if (n <= 0)
        throw PreconditionError("root index must be positive");
    if (c < 0)
        throw PreconditionError("root of a negative number");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) * static_cast<unsigned long>(n));
    Integer x = c * scale;
    Integer r;
    const int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return {r, exact != 0};
}

RootReport nth_root_report(const Integer& c, int n)
{
    RootReport rep;
    rep.n = n;
    rep.c = c;
    auto [r7, exact] = scaled_root(c, n, 7);
    Integer q = r7 / 10;
    const Integer d = r7 % 10;
    if (d > 5 || (d == 5 && !exact) || (d == 5 && exact && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    rep.exact = exact;
    rep.root = Rational(q, Integer(1000000));
    rep.root.canonicalize();
    std::string digits = q.get_str();
    if (digits.size() < 7)
        digits.insert(0, 7 - digits.size(), '0');
    rep.decimal = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
    return rep;
}

std::optional<int> predicted_exponent(const GradedStarAlgebra& alg)
{
    const int m = alg.size();
    if (m > 1 && same_degree_map(alg.grading(), finest_grading(m))) {
        if (alg.involution().kind() == InvolutionKind::symplectic)
            return m;
        return m % 2 == 1 ? m + 1 : m;
    }
    if (m == 3 && same_degree_map(alg.grading(), GradedStarAlgebra::ut3_z2().grading()))
        return 3;
    return std::nullopt;
}

std::vector<RootReport> exponent_estimate(const GradedStarAlgebra& alg, int n_max, const OracleOptions& opts)
{
    std::vector<RootReport> out;
    for (int n = 1; n <= n_max; ++n)
        out.push_back(nth_root_report(codimension(alg, n, opts).value, n));
    return out;
}

} // namespace gradstar
