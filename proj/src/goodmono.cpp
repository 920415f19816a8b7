#include "gradstar/goodmono.hpp"

#include "gradstar/errors.hpp"

#include <algorithm>

namespace gradstar {

namespace {

bool is_unit(const GroupElement& g)
{
    int ones = 0;
    for (auto c : g.coords()) {
        if (c == 1)
            ++ones;
        else if (c != 0)
            return false;
    }
    return ones == 1;
}

struct Context {
    int m;
    InvolutionKind kind;
    GradedStarAlgebra alg;
    std::vector<GroupElement> nonneutral;

    Context(int m_, InvolutionKind kind_)
        : m(m_), kind(kind_), alg(GradedStarAlgebra::finest(m_, kind_))
    {
        for (const auto& g : alg.grading().support())
            if (!g.is_zero())
                nonneutral.push_back(g);
    }

    int dim(const GroupElement& g) const { return alg.grading().component_dim(g); }
    bool odd_rules() const { return m % 2 == 1 && kind == InvolutionKind::reflection; }
};

// Constraints implied by a skeleton g_1..g_k (0-based letter positions).
struct SkeletonRules {
    std::vector<bool> block_empty;      // blocks 0..k, block i precedes letter i
    std::vector<bool> block_starless;
    std::vector<std::pair<int, int>> ordered; // (i, j): u_i < u_j
    bool single_letter_rule = false;     // M_1 or M_2 starless
};

SkeletonRules rules_for(const Context& ctx, const std::vector<GroupElement>& g)
{
    const int k = static_cast<int>(g.size());
    SkeletonRules r;
    r.block_empty.assign(static_cast<std::size_t>(k + 1), false);
    r.block_starless.assign(static_cast<std::size_t>(k + 1), false);
    for (int i = 0; i < k; ++i) {
        if (ctx.dim(g[static_cast<std::size_t>(i)]) == 1)
            r.block_empty[static_cast<std::size_t>(i)] = true;
        GroupElement sum = g[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            sum = sum + g[static_cast<std::size_t>(j)];
            if (ctx.dim(sum) == 1) {
                r.block_empty[static_cast<std::size_t>(i)] = true;
                r.ordered.emplace_back(i, j);
            }
        }
    }
    if (ctx.odd_rules()) {
        for (int i = 0; i + 1 < k; ++i)
            if (is_unit(g[static_cast<std::size_t>(i)]) && is_unit(g[static_cast<std::size_t>(i + 1)]))
                r.block_starless[static_cast<std::size_t>(i + 1)] = true;
        r.single_letter_rule = k == 1 && is_unit(g[0]);
    }
    return r;
}

} // namespace

GoodConditions good_conditions(const Monomial& mono, int m, InvolutionKind kind)
{
    const Context ctx(m, kind);
    const auto& G = ctx.alg.grading().group();
    if (!mono.is_multilinear())
        throw PreconditionError("good monomials are multilinear");
    std::vector<std::vector<Letter>> blocks(1);
    std::vector<Letter> skeleton;
    for (const auto& l : mono.letters()) {
        if (l.var.symmetry != Symmetry::free)
            throw PreconditionError("good monomials use free letters");
        if (!(l.var.degree.group() == G))
            throw StructuralError("letter " + l.to_string() + " is not graded by " + G.to_string());
        if (l.var.degree.is_zero()) {
            blocks.back().push_back(l);
        } else {
            skeleton.push_back(l);
            blocks.emplace_back();
        }
    }
    std::vector<GroupElement> g;
    for (const auto& l : skeleton)
        g.push_back(l.var.degree);
    const auto rules = rules_for(ctx, g);
    auto has_star = [](const std::vector<Letter>& b) {
        return std::any_of(b.begin(), b.end(), [](const Letter& l) { return l.starred; });
    };

    GoodConditions c;
    for (const auto& b : blocks)
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b[i - 1].var.index >= b[i].var.index)
                c.ascending = false;
    for (std::size_t i = 0; i < skeleton.size(); ++i)
        if (ctx.dim(g[i]) == 1 && (skeleton[i].starred || !blocks[i].empty()))
            c.one_dim_letters = false;
    for (const auto& [i, j] : rules.ordered)
        if (!blocks[static_cast<std::size_t>(i)].empty() ||
            skeleton[static_cast<std::size_t>(i)].var.index >= skeleton[static_cast<std::size_t>(j)].var.index)
            c.one_dim_products = false;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (rules.block_starless[b] && has_star(blocks[b]))
            c.unit_neighbours = false;
    if (rules.single_letter_rule && has_star(blocks[0]) && has_star(blocks[1]))
        c.single_letter = false;
    c.non_identity = !monomial_is_identity(mono, ctx.alg);
    return c;
}

bool is_good(const Monomial& mono, int m, InvolutionKind kind) { return good_conditions(mono, m, kind).all(); }

namespace {

class GoodWalker {
public:
    GoodWalker(const Context& ctx, int n, const std::function<void(const Monomial&, int)>& visit)
        : ctx_(ctx), n_(n), visit_(visit), zero_(ctx.alg.grading().group().zero())
    {
    }

    void run(int k)
    {
        k_ = k;
        g_.assign(static_cast<std::size_t>(k), zero_);
        star_.assign(static_cast<std::size_t>(k), false);
        skeleton(0, {});
    }

private:
    using Paths = std::vector<std::pair<int, int>>; // (first row, last column)

    // Chooses degrees and stars of the non-neutral letters, keeping only
    // prefixes that have a nonzero elementary substitution.
    void skeleton(int t, const Paths& paths)
    {
        if (t == k_) {
            with_skeleton();
            return;
        }
        for (const auto& g : ctx_.nonneutral) {
            const bool one_dim = ctx_.dim(g) == 1;
            for (int s = 0; s < (one_dim ? 1 : 2); ++s) {
                Paths next;
                for (const auto& [i, j] : ctx_.alg.grading().positions(g)) {
                    int a = i, b = j;
                    if (s) {
                        const auto img = ctx_.alg.involution().on_elementary(i, j);
                        a = img.i;
                        b = img.j;
                    }
                    if (t == 0) {
                        next.emplace_back(a, b);
                        continue;
                    }
                    for (const auto& [first, last] : paths)
                        if (last == a)
                            next.emplace_back(first, b);
                }
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                if (next.empty())
                    continue;
                g_[static_cast<std::size_t>(t)] = g;
                star_[static_cast<std::size_t>(t)] = s != 0;
                skeleton(t + 1, next);
            }
        }
    }

    void with_skeleton()
    {
        rules_ = rules_for(ctx_, g_);
        u_.assign(static_cast<std::size_t>(k_), 0);
        used_.assign(static_cast<std::size_t>(n_ + 1), false);
        choose_u(0);
    }

    void choose_u(int t)
    {
        if (t == k_) {
            neutral_.clear();
            for (int i = 1; i <= n_; ++i)
                if (!used_[static_cast<std::size_t>(i)])
                    neutral_.push_back(i);
            block_of_.assign(neutral_.size(), 0);
            star_of_.assign(neutral_.size(), false);
            place(0);
            return;
        }
        for (int u = 1; u <= n_; ++u) {
            if (used_[static_cast<std::size_t>(u)])
                continue;
            bool ok = true;
            for (const auto& [i, j] : rules_.ordered)
                if (j == t && u_[static_cast<std::size_t>(i)] >= u)
                    ok = false;
            if (!ok)
                continue;
            u_[static_cast<std::size_t>(t)] = u;
            used_[static_cast<std::size_t>(u)] = true;
            choose_u(t + 1);
            used_[static_cast<std::size_t>(u)] = false;
        }
    }

    // Neutral indices are placed in increasing order, so blocks ascend.
    void place(std::size_t t)
    {
        if (t == neutral_.size()) {
            emit();
            return;
        }
        for (int b = 0; b <= k_; ++b) {
            if (rules_.block_empty[static_cast<std::size_t>(b)])
                continue;
            const int stars = rules_.block_starless[static_cast<std::size_t>(b)] ? 1 : 2;
            for (int s = 0; s < stars; ++s) {
                block_of_[t] = b;
                star_of_[t] = s != 0;
                place(t + 1);
            }
        }
    }

    void emit()
    {
        if (rules_.single_letter_rule) {
            bool star0 = false, star1 = false;
            for (std::size_t t = 0; t < neutral_.size(); ++t)
                if (star_of_[t])
                    (block_of_[t] == 0 ? star0 : star1) = true;
            if (star0 && star1)
                return;
        }
        std::vector<Letter> letters;
        letters.reserve(static_cast<std::size_t>(n_));
        for (int b = 0; b <= k_; ++b) {
            for (std::size_t t = 0; t < neutral_.size(); ++t)
                if (block_of_[t] == b)
                    letters.push_back(Letter{Variable{neutral_[t], zero_, Symmetry::free}, star_of_[t]});
            if (b < k_)
                letters.push_back(Letter{Variable{u_[static_cast<std::size_t>(b)], g_[static_cast<std::size_t>(b)],
                                                  Symmetry::free},
                                         star_[static_cast<std::size_t>(b)]});
        }
        Monomial mono(std::move(letters));
        if (monomial_is_identity(mono, ctx_.alg))
            return;
        visit_(mono, k_);
    }

    const Context& ctx_;
    int n_;
    const std::function<void(const Monomial&, int)>& visit_;
    GroupElement zero_;
    int k_ = 0;
    std::vector<GroupElement> g_;
    std::vector<bool> star_;
    SkeletonRules rules_;
    std::vector<int> u_;
    std::vector<bool> used_;
    std::vector<int> neutral_;
    std::vector<int> block_of_;
    std::vector<bool> star_of_;
};

} // namespace

void for_each_good(int m, int n, InvolutionKind kind, const std::function<void(const Monomial&, int)>& visit,
                   int only_k)
{
    if (m < 1 || n < 0)
        throw PreconditionError("good monomials need m >= 1 and n >= 0");
    const Context ctx(m, kind);
    GoodWalker w(ctx, n, visit);
    for (int k = 0; k <= std::min(m - 1, n); ++k)
        if (only_k < 0 || only_k == k)
            w.run(k);
}

std::vector<Integer> count_good(int m, int n, InvolutionKind kind, int only_k)
{
    std::vector<Integer> counts(static_cast<std::size_t>(std::max(m, 1)), 0);
    for_each_good(m, n, kind, [&](const Monomial&, int k) { counts[static_cast<std::size_t>(k)] += 1; }, only_k);
    return counts;
}

GoodEnumeration enumerate_good(int m, int n, InvolutionKind kind, std::uint64_t budget)
{
    GoodEnumeration out;
    std::vector<Integer> counts(static_cast<std::size_t>(std::max(m, 1)), 0);
    for_each_good(m, n, kind, [&](const Monomial& mono, int k) {
        if (out.monomials.size() >= budget)
            throw BudgetExceeded("more than " + std::to_string(budget) + " good monomials");
        out.monomials.push_back(mono);
        counts[static_cast<std::size_t>(k)] += 1;
    });
    const std::string method = kind == InvolutionKind::symplectic ? "enumerator/adapted-symplectic" : "enumerator";
    for (int k = 0; k < static_cast<int>(counts.size()); ++k)
        out.counts.push_back(CountRecord{m, n, k, counts[static_cast<std::size_t>(k)], method});
    return out;
}

namespace {

Integer ipow(long b, long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

} // namespace

Integer closed_count_top(int m, int n)
{
    if (m < 2)
        throw PreconditionError("closed counts need m >= 2");
    if (n < m - 1)
        return 0;
    const int r = m / 2;
    const Integer base = factorial(m - 1) * binomial(n, m - 1);
    if (m % 2 == 1)
        return base * ipow(2, m - 1) * ipow(r + 1, n - m + 1) * (ipow(2, n - m + 2) - 1);
    return base * ipow(2, m - 2) * ipow(r, n - m + 1) * ipow(2, n - m + 1);
}

Integer derived_count_top(int m, int n)
{
    if (m < 2)
        throw PreconditionError("closed counts need m >= 2");
    if (n < m - 1)
        return 0;
    const int r = m / 2;
    const Integer base = factorial(m - 1) * binomial(n, m - 1);
    if (m % 2 == 1)
        return base * ipow(2, m - 1 - r) * ipow(m, n - m + 1);
    return base / ipow(2, r - 1) * ipow(2, m - 2) * ipow(2 * r, n - m + 1);
}

std::vector<Monomial> monomial_identities(int m, int up_to_k, InvolutionKind kind)
{
    if (up_to_k > m)
        throw PreconditionError("monomial identities are listed up to k = m");
    const Context ctx(m, kind);
    std::vector<Monomial> out;
    const std::size_t d = ctx.nonneutral.size();
    for (int k = 1; k <= up_to_k; ++k) {
        if (d == 0)
            break;
        std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
        while (true) {
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                std::vector<Letter> letters;
                for (int i = 0; i < k; ++i)
                    letters.push_back(Letter{Variable{i + 1, ctx.nonneutral[pick[static_cast<std::size_t>(i)]],
                                                      Symmetry::free},
                                             (mask >> i & 1u) != 0});
                Monomial mono(std::move(letters));
                if (k == m || monomial_is_identity(mono, ctx.alg))
                    out.push_back(std::move(mono));
            }
            int t = k - 1;
            while (t >= 0 && pick[static_cast<std::size_t>(t)] + 1 == d)
                pick[static_cast<std::size_t>(t--)] = 0;
            if (t < 0)
                break;
            ++pick[static_cast<std::size_t>(t)];
        }
    }
    return out;
}

Integer tuple_count(int n, int t)
{
    if (n < 0 || t < 1)
        throw PreconditionError("tuple counts need n >= 0 and t >= 1");
    if (n * t > 24)
        throw PreconditionError("brute-force tuple count limited to n * t <= 24");
    const std::uint32_t full = (1u << n) - 1;
    Integer count = 0;
    auto rec = [&](auto&& self, int i, std::uint32_t covered) -> void {
        if (i == t) {
            if (covered == full)
                count += 1;
            return;
        }
        for (std::uint32_t s = 0; s <= full; ++s)
            if ((s & covered) == 0)
                self(self, i + 1, covered | s);
    };
    rec(rec, 0, 0);
    return count;
}

bool tuple_count_check(int n, int t) { return tuple_count(n, t) == ipow(t, n); }

Integer good_upper_bound(int m, int n, int k)
{
    const long dim = static_cast<long>(m) * (m + 1) / 2;
    const long w = (m + 1) / 2;
    if (k < 0 || k > n)
        return 0;
    return ipow(dim, k) * factorial(k) * binomial(n, k) * ipow(w, n - k) * ipow(2, n);
}

} // namespace gradstar
