#ifndef WID_STRUCTURE_HPP
#define WID_STRUCTURE_HPP

#include <wid/clifford.hpp>
#include <wid/freealg.hpp>
#include <wid/linalg.hpp>
#include <wid/pairs.hpp>
#include <wid/partitions.hpp>
#include <wid/scalars.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wid {

// ---------------------------------------------------------------------------
// Rank options and reports
// ---------------------------------------------------------------------------

struct RankOptions {
    /// Each seed s specializes q_i to the (s*k + i)-th prime.
    std::vector<unsigned> seeds{0, 1};
    /// Always run fraction-free elimination over the symbolic parameters.
    bool exact = false;
    std::size_t degree_cap = 6;
    bool allow_degree_7 = false;

    std::size_t effective_cap() const { return allow_degree_7 ? std::max<std::size_t>(degree_cap, 7) : degree_cap; }
};

inline void check_rank_degree(std::size_t n, const RankOptions& opts)
{
    if (n == 0)
        throw std::invalid_argument("degree must be positive");
    if (n > 7 || n > opts.effective_cap())
        throw std::invalid_argument("degree " + std::to_string(n) + " exceeds the rank-computation cap "
                                    + std::to_string(opts.effective_cap())
                                    + (n == 7 ? " (degree 7 needs the explicit opt-in)" : ""));
}

/*
 * Outcome of a rank computation in the degree-n multilinear slice (n! words).
 *
 * kind == "evaluation": rows are words, columns are (basis tuple, blade or
 *   matrix entry); kernel_dim = n! - rank counts multilinear weak identities
 *   and quotient_dim = rank.
 * kind == "span": rows are spanning consequences; rank is the span dimension,
 *   kernel_dim = rank (the span is a candidate kernel) and
 *   quotient_dim = n! - rank.
 */
struct RankReport {
    std::string kind;
    std::size_t degree = 0;
    std::string target;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t distinct_cols = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t quotient_dim = 0;
    std::vector<unsigned> seeds;
    std::vector<std::size_t> seed_ranks;
    bool exact = false;
};

inline std::uint64_t factorial(std::size_t n)
{
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline std::uint64_t nth_prime(std::size_t n)
{
    static std::vector<std::uint64_t> primes{2};
    for (std::uint64_t c = primes.back() + 1; primes.size() < n; ++c) {
        bool prime = true;
        for (auto p : primes) {
            if (p * p > c)
                break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(c);
    }
    return primes.at(n - 1);
}

/// Values of q_1..q_k for a specialization seed: distinct small primes.
inline std::vector<Rational> seed_assignment(unsigned seed, std::size_t k)
{
    std::vector<Rational> v;
    for (std::size_t i = 1; i <= k; ++i)
        v.emplace_back(static_cast<long>(nth_prime(seed * k + i)));
    return v;
}

// ---------------------------------------------------------------------------
// Multilinear slice helpers
// ---------------------------------------------------------------------------

/// Position of each multilinear word of degree n in multilinear_words(n).
class WordIndex {
public:
    explicit WordIndex(std::size_t n) : n_(n), words_(multilinear_words(n, 8))
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            index_.emplace(words_[i], i);
    }

    std::size_t degree() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }

    /// Coefficient vector of f; f must be multilinear in exactly x_1..x_n.
    std::vector<Rational> vector_of(const NcPoly& f) const
    {
        std::vector<Rational> v(words_.size());
        for (const auto& [w, c] : f.terms()) {
            auto it = index_.find(w);
            if (it == index_.end())
                throw std::invalid_argument("word " + w.str() + " is not multilinear in x1..x"
                                            + std::to_string(n_));
            v[it->second] = c;
        }
        return v;
    }

    NcPoly poly_of(const std::vector<Rational>& v) const
    {
        NcPoly f;
        for (std::size_t i = 0; i < v.size(); ++i)
            f.add_term(words_[i], v[i]);
        return f;
    }

private:
    std::size_t n_;
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
};

/// Renames the generators of f to 1..m in ascending order.
inline NcPoly standardize_generators(const NcPoly& f, const std::vector<Gen>& order)
{
    std::map<Gen, Gen> to;
    for (std::size_t i = 0; i < order.size(); ++i)
        to[order[i]] = static_cast<Gen>(i + 1);
    return rename(f, to);
}

// ---------------------------------------------------------------------------
// Evaluation model: image of the degree-n multilinear slice in the target
// ---------------------------------------------------------------------------

/*
 * Evaluation matrix of the multilinear words of degree n at every tuple of
 * substitution-basis elements, with the parameters specialized by a seed.
 *
 * For a Clifford target each basis tuple sends every multilinear word to
 * +/- the same Gram monomial times the same blade, so a column is a nonzero
 * scalar times an integer vector.  Columns are stored normalized (gcd 1,
 * first nonzero entry positive), which divides that scalar out exactly;
 * distinct normalized columns are kept and a maximal independent subset
 * (the pivot columns) defines quotient coordinates: f lies in the kernel
 * iff its pairing with every pivot column vanishes.
 */
class EvaluationModel {
public:
    EvaluationModel(std::size_t n, const PairTarget& target, unsigned seed = 0)
        : n_(n), target_(target), words_(n), seed_(seed)
    {
        build();
    }

    std::size_t degree() const { return n_; }
    const PairTarget& target() const { return target_; }
    const WordIndex& words() const { return words_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t raw_columns() const { return raw_columns_; }
    std::size_t distinct_columns() const { return distinct_; }
    const std::vector<Rational>& q_values() const { return q_values_; }

    std::vector<Rational> coordinates(const std::vector<Rational>& v) const
    {
        std::vector<Rational> c(pivots_.size());
        for (std::size_t j = 0; j < pivots_.size(); ++j) {
            Rational s;
            const auto& col = pivots_[j];
            for (std::size_t i = 0; i < v.size(); ++i)
                if (col[i] != 0 && !v[i].is_zero())
                    s += v[i] * Rational(static_cast<long>(col[i]));
            c[j] = s;
        }
        return c;
    }

    /// Quotient coordinates of a polynomial multilinear in x_1..x_n.
    std::vector<Rational> coordinates(const NcPoly& f) const { return coordinates(words_.vector_of(f)); }

    bool vanishes(const std::vector<Rational>& v) const
    {
        for (const auto& c : coordinates(v))
            if (!c.is_zero())
                return false;
        return true;
    }
    bool vanishes(const NcPoly& f) const { return vanishes(words_.vector_of(f)); }

private:
    using IntColumn = std::vector<std::int64_t>;

    static bool normalize(IntColumn& c)
    {
        std::int64_t g = 0;
        for (auto x : c)
            g = std::gcd(g, x < 0 ? -x : x);
        if (g == 0)
            return false;
        std::int64_t first = 0;
        for (auto x : c)
            if (x) {
                first = x;
                break;
            }
        const std::int64_t d = first < 0 ? -g : g;
        for (auto& x : c)
            x /= d;
        return true;
    }

    static std::vector<std::size_t> order_pattern(const std::vector<std::size_t>& t)
    {
        std::vector<std::size_t> values(t);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<std::size_t> p(t.size());
        for (std::size_t j = 0; j < t.size(); ++j)
            p[j] = static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), t[j]) - values.begin());
        return p;
    }

    void build()
    {
        const auto& words = words_.words();
        const std::size_t rows = words.size();
        std::set<IntColumn> distinct;

        if (const auto* cp = std::get_if<CliffordPair>(&target_)) {
            const FormParams& form = cp->form;
            const std::size_t k = form.dim();
            q_values_ = form.is_symbolic() ? seed_assignment(seed_, k) : *form.values();
            raw_columns_ = static_cast<std::size_t>(std::pow(double(k), double(n_))) << k;
            std::vector<std::uint32_t> exps(k), first_exps(k);
            // The sign of a word at a tuple is the parity of its strict
            // inversions, so a column depends only on the tuple's pattern of
            // ties and relative order; one tuple per pattern is enough.
            std::set<std::vector<std::size_t>> patterns;
            for (TupleOdometer odo(k, n_); !odo.done(); odo.next()) {
                const auto& t = odo.tuple();
                if (!patterns.insert(order_pattern(t)).second)
                    continue;
                IntColumn col(rows);
                std::uint32_t col_mask = 0;
                for (std::size_t r = 0; r < rows; ++r) {
                    std::uint32_t mask = 0;
                    std::size_t swaps = 0;
                    std::fill(exps.begin(), exps.end(), 0);
                    for (Gen g : words[r].letters) {
                        const std::size_t i = t[g - 1] + 1;
                        swaps += static_cast<std::size_t>(std::popcount(mask >> i));
                        const std::uint32_t bit = 1u << (i - 1);
                        if (mask & bit)
                            ++exps[i - 1];
                        mask ^= bit;
                    }
                    if (r == 0) {
                        col_mask = mask;
                        first_exps = exps;
                    } else if (mask != col_mask || exps != first_exps) {
                        throw std::logic_error("multilinear basis evaluation produced mixed blades");
                    }
                    col[r] = (swaps & 1) ? -1 : 1;
                }
                // the Gram monomial is a common nonzero factor of the column
                Rational scalar(1);
                for (std::size_t i = 0; i < k; ++i)
                    if (first_exps[i])
                        scalar *= q_values_[i].pow(first_exps[i]);
                if (scalar.is_zero())
                    throw std::logic_error("specialization annihilated a Gram monomial");
                if (normalize(col))
                    distinct.insert(std::move(col));
            }
        } else {
            struct IM {
                std::int64_t a, b, c, d;
            };
            const IM basis[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}};
            raw_columns_ = static_cast<std::size_t>(std::pow(3.0, double(n_))) * 4;
            for (TupleOdometer odo(3, n_); !odo.done(); odo.next()) {
                const auto& t = odo.tuple();
                std::array<IntColumn, 4> cols;
                for (auto& c : cols)
                    c.assign(rows, 0);
                for (std::size_t r = 0; r < rows; ++r) {
                    IM m{1, 0, 0, 1};
                    for (Gen g : words[r].letters) {
                        const IM& x = basis[t[g - 1]];
                        m = IM{m.a * x.a + m.b * x.c, m.a * x.b + m.b * x.d, m.c * x.a + m.d * x.c,
                               m.c * x.b + m.d * x.d};
                    }
                    cols[0][r] = m.a;
                    cols[1][r] = m.b;
                    cols[2][r] = m.c;
                    cols[3][r] = m.d;
                }
                for (auto& c : cols)
                    if (normalize(c))
                        distinct.insert(std::move(c));
            }
        }

        distinct_ = distinct.size();
        RowEchelon echelon(rows);
        for (const auto& col : distinct) {
            if (echelon.rank() == rows)
                break;
            std::vector<Rational> v(rows);
            for (std::size_t i = 0; i < rows; ++i)
                v[i] = Rational(static_cast<long>(col[i]));
            if (echelon.insert(std::move(v)))
                pivots_.push_back(col);
        }
    }

    std::size_t n_;
    PairTarget target_;
    WordIndex words_;
    unsigned seed_;
    std::vector<Rational> q_values_;
    std::size_t raw_columns_ = 0;
    std::size_t distinct_ = 0;
    std::vector<IntColumn> pivots_;
};

/*
 * Exact rank of the degree-n evaluation matrix over the symbolic parameters:
 * every (tuple, blade) column is computed through the general Clifford
 * evaluation with ParamPoly coefficients, identical columns are merged, and
 * the rank is taken by fraction-free elimination over Q[q_1..q_k].
 */
inline std::size_t exact_evaluation_rank(std::size_t n, const PairTarget& target)
{
    const WordIndex words(n);
    const std::vector<Gen> gens = [&] {
        std::vector<Gen> g(n);
        std::iota(g.begin(), g.end(), Gen{1});
        return g;
    }();
    std::set<std::vector<ParamPoly>> columns;
    const std::size_t base = substitution_dim(target);
    for (TupleOdometer odo(base, n); !odo.done(); odo.next()) {
        std::map<std::size_t, std::vector<ParamPoly>> by_entry;
        for (std::size_t r = 0; r < words.size(); ++r) {
            const PairValue v = evaluate_on_tuple(NcPoly(words.words()[r]), target, gens, odo.tuple());
            if (const auto* ce = std::get_if<CliffordElt>(&v)) {
                for (const auto& [b, c] : ce->terms()) {
                    auto& col = by_entry[b.mask];
                    col.resize(words.size());
                    col[r] = c;
                }
            } else {
                const auto& m = std::get<Mat2>(v);
                for (std::size_t e = 0; e < 4; ++e) {
                    if (m.e[e].is_zero())
                        continue;
                    auto& col = by_entry[e];
                    col.resize(words.size());
                    col[r] = m.e[e];
                }
            }
        }
        for (auto& [key, col] : by_entry)
            columns.insert(std::move(col));
    }
    // rows = words, columns = distinct evaluation columns
    Matrix<ParamPoly> m(words.size());
    for (const auto& col : columns)
        for (std::size_t r = 0; r < words.size(); ++r)
            m[r].push_back(col[r]);
    return bareiss_rank(std::move(m));
}

inline RankReport evaluation_kernel(std::size_t n, const PairTarget& target, const RankOptions& opts = {})
{
    check_rank_degree(n, opts);
    RankReport rep;
    rep.kind = "evaluation";
    rep.degree = n;
    rep.target = describe(target);
    rep.rows = static_cast<std::size_t>(factorial(n));

    const auto* cp = std::get_if<CliffordPair>(&target);
    const bool seeded = cp && cp->form.is_symbolic();
    const std::vector<unsigned> seeds = seeded ? opts.seeds : std::vector<unsigned>{0};
    if (seeds.empty())
        throw std::invalid_argument("at least one specialization seed is required");
    for (unsigned s : seeds) {
        EvaluationModel model(n, target, s);
        rep.cols = model.raw_columns();
        rep.distinct_cols = model.distinct_columns();
        rep.seed_ranks.push_back(model.rank());
    }
    if (seeded)
        rep.seeds = seeds;
    rep.rank = rep.seed_ranks.front();
    const bool agree = std::all_of(rep.seed_ranks.begin(), rep.seed_ranks.end(),
                                   [&](std::size_t r) { return r == rep.rank; });
    if (!agree || opts.exact) {
        rep.rank = exact_evaluation_rank(n, target);
        rep.exact = true;
    }
    rep.kernel_dim = rep.rows - rep.rank;
    rep.quotient_dim = rep.rank;
    return rep;
}

// ---------------------------------------------------------------------------
// Multilinear GL-consequences
// ---------------------------------------------------------------------------

/*
 * Spanning set of the degree-n multilinear part of the GL-ideal generated by
 * g: m1 * g'(x_{a_1},...,x_{a_m}) * m2, where g' is the full linearization
 * of g, a is an injection into {1..n} and m1, m2 split an ordering of the
 * remaining letters.  Returned as coefficient vectors over multilinear_words(n),
 * normalized and deduplicated.
 */
inline std::vector<std::vector<Rational>> consequence_spanning_set(std::size_t n, const NcPoly& generator)
{
    if (generator.is_zero())
        return {};
    if (!is_multihomogeneous(generator))
        throw std::invalid_argument("consequence span: generator is not multihomogeneous");
    const NcPoly lin = multilinearize(generator);
    const auto gen_set = lin.generators();
    const std::vector<Gen> vars(gen_set.begin(), gen_set.end());
    const std::size_t m = vars.size();
    if (m > n || lin.max_degree() != m)
        return {};

    const WordIndex words(n);
    std::set<std::vector<Rational>> rows;

    std::vector<Gen> letters(n);
    std::iota(letters.begin(), letters.end(), Gen{1});
    // injections: ordered choices of m distinct letters
    std::vector<bool> chosen(n + 1, false);
    std::vector<Gen> image;
    auto emit = [&]() {
        std::map<Gen, Gen> to;
        for (std::size_t i = 0; i < m; ++i)
            to[vars[i]] = image[i];
        const NcPoly core = rename(lin, to);
        std::vector<Gen> rest;
        for (Gen l = 1; l <= n; ++l)
            if (!chosen[l])
                rest.push_back(l);
        do {
            for (std::size_t split = 0; split <= rest.size(); ++split) {
                Word left(std::vector<Gen>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(split)));
                Word right(std::vector<Gen>(rest.begin() + static_cast<std::ptrdiff_t>(split), rest.end()));
                NcPoly elt = NcPoly(left) * core * NcPoly(right);
                auto v = words.vector_of(elt);
                auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
                if (first == v.end())
                    continue;
                const Rational inv = Rational(1) / *first;
                for (auto& x : v)
                    x *= inv;
                rows.insert(std::move(v));
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    auto rec = [&](auto&& self) -> void {
        if (image.size() == m) {
            emit();
            return;
        }
        for (Gen l = 1; l <= n; ++l) {
            if (chosen[l])
                continue;
            chosen[l] = true;
            image.push_back(l);
            self(self);
            image.pop_back();
            chosen[l] = false;
        }
    };
    rec(rec);
    return {rows.begin(), rows.end()};
}

/// Echelon basis of the degree-n multilinear consequences of the generators.
class ConsequenceSpan {
public:
    ConsequenceSpan(std::size_t n, const std::vector<NcPoly>& generators) : words_(n), echelon_(words_.size())
    {
        for (const auto& g : generators) {
            for (auto& row : consequence_spanning_set(n, g)) {
                ++elements_;
                echelon_.insert(row);
                spanning_.push_back(std::move(row));
            }
        }
    }

    std::size_t rank() const { return echelon_.rank(); }
    std::size_t elements() const { return elements_; }
    const WordIndex& words() const { return words_; }
    const std::vector<std::vector<Rational>>& spanning() const { return spanning_; }

    /// f multilinear in x_1..x_n.
    bool contains(const NcPoly& f) const { return echelon_.contains(words_.vector_of(f)); }

private:
    WordIndex words_;
    RowEchelon echelon_;
    std::size_t elements_ = 0;
    std::vector<std::vector<Rational>> spanning_;
};

inline RankReport span_report(const ConsequenceSpan& span, std::size_t n, const std::string& label)
{
    RankReport rep;
    rep.kind = "span";
    rep.degree = n;
    rep.target = label;
    rep.rows = span.elements();
    rep.cols = span.words().size();
    rep.distinct_cols = rep.cols;
    rep.rank = span.rank();
    rep.kernel_dim = rep.rank;
    rep.quotient_dim = rep.cols - rep.rank;
    rep.exact = true;
    return rep;
}

inline RankReport consequence_span_dim(std::size_t n, const std::vector<NcPoly>& generators,
                                       const RankOptions& opts = {})
{
    check_rank_degree(n, opts);
    ConsequenceSpan span(n, generators);
    return span_report(span, n, "consequences");
}

/// Report of a span-versus-kernel comparison at one degree.
struct SpanKernelCheck {
    std::size_t n = 0;
    std::size_t k = 0;
    RankReport span;
    RankReport kernel;
    bool span_in_kernel = false;
    bool holds = false;
};

/*
 * The consequences of [x1^2,x2] in degree n coincide with the multilinear
 * weak identities of (C_n, V_n): equal dimensions, and every spanning
 * element passes the weak-identity decision procedure.
 */
inline SpanKernelCheck theorem1_check(std::size_t n, const RankOptions& opts = {})
{
    if (n < 3)
        throw std::invalid_argument("theorem1_check needs n >= 3");
    check_rank_degree(n, opts);
    SpanKernelCheck res;
    res.n = n;
    res.k = n;
    const ConsequenceSpan span(n, {square_commutator()});
    res.span = span_report(span, n, "consequences of [x1^2,x2]");
    const PairTarget target = clifford_pair(n);
    res.kernel = evaluation_kernel(n, target, opts);
    res.span_in_kernel = true;
    for (const auto& row : span.spanning()) {
        const NcPoly f = span.words().poly_of(row);
        if (!is_weak_identity(f, target, std::max<std::size_t>(n, default_degree_cap)).holds) {
            res.span_in_kernel = false;
            break;
        }
    }
    res.holds = res.span_in_kernel && res.span.rank == res.kernel.kernel_dim;
    return res;
}

/*
 * The multilinear weak identities of (C_k, V_k) in degree n are spanned by
 * the consequences of [x1^2,x2] and of S_{k+1}.
 */
inline SpanKernelCheck corollary1_check(std::size_t n, std::size_t k, const RankOptions& opts = {})
{
    if (k == 0)
        throw std::invalid_argument("corollary1_check needs k >= 1");
    check_rank_degree(n, opts);
    SpanKernelCheck res;
    res.n = n;
    res.k = k;
    const ConsequenceSpan span(n, {square_commutator(), standard_poly(k + 1)});
    res.span = span_report(span, n, "consequences of [x1^2,x2], S_" + std::to_string(k + 1));
    const PairTarget target = clifford_pair(k);
    res.kernel = evaluation_kernel(n, target, opts);
    const EvaluationModel model(n, target, opts.seeds.empty() ? 0 : opts.seeds.front());
    res.span_in_kernel = std::all_of(span.spanning().begin(), span.spanning().end(),
                                     [&](const auto& row) { return model.vanishes(row); });
    res.holds = res.span_in_kernel && res.span.rank == res.kernel.kernel_dim;
    return res;
}

// ---------------------------------------------------------------------------
// Insertion coefficients
// ---------------------------------------------------------------------------

/// Coefficients with sum (-1)^s x_s1..x_sk y x_s(k+1)..x_sn = alpha*y*S_n + beta*S_n*y modulo [x1^2,x2].
struct InsertionCoeffs {
    Rational alpha;
    Rational beta;
    std::size_t n = 0;
    std::size_t k = 0;
};

inline void check_insertion_range(std::size_t n, std::size_t k)
{
    if (n < 2 || k < 1 || k > n - 1)
        throw std::invalid_argument("insertion coefficients need n >= 2 and 1 <= k <= n-1 (got n="
                                    + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

inline InsertionCoeffs lemma2_coeffs(std::size_t n, std::size_t k)
{
    check_insertion_range(n, k);
    const Rational nn(static_cast<long>(n));
    const Rational alpha1 = -Rational(static_cast<long>(n - 1)) / nn;
    const Rational beta1 = Rational((n - 1) % 2 ? -1 : 1) / nn;
    if (k == 1)
        return {alpha1, beta1, n, k};
    const InsertionCoeffs prev = lemma2_coeffs(n - 1, k - 1);
    return {prev.alpha * alpha1, prev.alpha * beta1 + prev.beta, n, k};
}

/// x_i = generator i (1..n), y = generator n+1.
inline NcPoly insertion_sum(std::size_t n, std::size_t k)
{
    check_insertion_range(n, k);
    std::vector<Gen> perm(n);
    std::iota(perm.begin(), perm.end(), Gen{1});
    const Gen y = static_cast<Gen>(n + 1);
    NcPoly f;
    do {
        std::vector<Gen> letters(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
        letters.push_back(y);
        letters.insert(letters.end(), perm.begin() + static_cast<std::ptrdiff_t>(k), perm.end());
        f.add_term(Word(std::move(letters)), Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

inline NcPoly eq5_defect(std::size_t n, std::size_t k)
{
    const InsertionCoeffs c = lemma2_coeffs(n, k);
    const NcPoly y = NcPoly::gen(static_cast<Gen>(n + 1));
    const NcPoly s = standard_poly(n);
    return insertion_sum(n, k) - (y * s) * c.alpha - (s * y) * c.beta;
}

inline NcPoly eq6_defect(std::size_t n, std::size_t i)
{
    if (n < 1 || i < 1 || i > n)
        throw std::invalid_argument("eq6_defect needs 1 <= i <= n");
    const NcPoly x = NcPoly::gen(static_cast<Gen>(i));
    const NcPoly s = standard_poly(n);
    return x * s - (s * x) * Rational((n - 1) % 2 ? -1 : 1);
}

struct SolvedInsertion {
    InsertionCoeffs coeffs;
    bool unique = false;
};

/*
 * Insertion coefficients obtained by solving the identity in the image of
 * evaluation on (C_{n+1}, V_{n+1}) instead of from the recursion.
 */
inline std::optional<SolvedInsertion> solve_insertion_coeffs(std::size_t n, std::size_t k,
                                                             const EvaluationModel& model)
{
    check_insertion_range(n, k);
    if (model.degree() != n + 1)
        throw std::invalid_argument("solve_insertion_coeffs: model must have degree n+1");
    const NcPoly y = NcPoly::gen(static_cast<Gen>(n + 1));
    const NcPoly s = standard_poly(n);
    const Matrix<Rational> cols{model.coordinates(y * s), model.coordinates(s * y)};
    auto x = solve_columns(cols, model.coordinates(insertion_sum(n, k)));
    if (!x)
        return std::nullopt;
    SolvedInsertion out{{(*x)[0], (*x)[1], n, k}, rational_rank({cols[0], cols[1]}) == 2};
    return out;
}

inline std::optional<SolvedInsertion> solve_insertion_coeffs(std::size_t n, std::size_t k,
                                                             const RankOptions& opts = {})
{
    check_insertion_range(n, k);
    check_rank_degree(n + 1, opts);
    const EvaluationModel model(n + 1, clifford_pair(n + 1), opts.seeds.empty() ? 0 : opts.seeds.front());
    return solve_insertion_coeffs(n, k, model);
}

// ---------------------------------------------------------------------------
// Skew-symmetrization across a word (x_1 = 1, x_2 = 2, y_j = 2 + j)
// ---------------------------------------------------------------------------

/// c * A [x1,x2] B with A, B words in the y generators.
struct CommutatorTerm {
    Rational coeff;
    Word left;
    Word right;
};

inline NcPoly lemma1_lhs(std::size_t n)
{
    std::vector<Gen> ys;
    for (std::size_t j = 1; j <= n; ++j)
        ys.push_back(static_cast<Gen>(2 + j));
    const Word middle(ys);
    return NcPoly(Word{1} * middle * Word{2}) - NcPoly(Word{2} * middle * Word{1});
}

namespace detail {

inline void add_commutator_term(std::vector<CommutatorTerm>& acc, const CommutatorTerm& t)
{
    if (t.coeff.is_zero())
        return;
    for (auto it = acc.begin(); it != acc.end(); ++it) {
        if (it->left == t.left && it->right == t.right) {
            it->coeff += t.coeff;
            if (it->coeff.is_zero())
                acc.erase(it);
            return;
        }
    }
    acc.push_back(t);
}

/*
 * x1 Y x2 - x2 Y x1 for the word Y = ys, rewritten modulo the consequences of
 * [x1^2,x2].  Length 1 uses x1 y x2 - x2 y x1 = -[x1,x2] o y; longer words use
 *   x1 y1 W x2 - x2 y1 W x1 = -y1 (x1 W' x2 - ...) + y2 (x1 y1 W'' x2 - ...)
 *                              + y2 y1 (x1 W''' x2 - ...)
 * obtained from 2(f2(x1,x2,...) - f2(x2,x1,...)) with f2 = [x1 o y1, y2] y3..yn x2.
 */
inline std::vector<CommutatorTerm> skew_rewrite(const std::vector<Gen>& ys)
{
    std::vector<CommutatorTerm> out;
    if (ys.empty()) {
        out.push_back({Rational(1), Word{}, Word{}});
        return out;
    }
    if (ys.size() == 1) {
        out.push_back({Rational(-1, 2), Word{ys[0]}, Word{}});
        out.push_back({Rational(-1, 2), Word{}, Word{ys[0]}});
        return out;
    }
    auto scaled = [&](const std::vector<Gen>& sub, const Word& prefix, const Rational& c) {
        for (const auto& t : skew_rewrite(sub))
            add_commutator_term(out, {t.coeff * c, prefix * t.left, t.right});
    };
    std::vector<Gen> without_first(ys.begin() + 1, ys.end());
    std::vector<Gen> without_second{ys[0]};
    without_second.insert(without_second.end(), ys.begin() + 2, ys.end());
    std::vector<Gen> without_both(ys.begin() + 2, ys.end());
    scaled(without_first, Word{ys[0]}, Rational(-1));
    scaled(without_second, Word{ys[1]}, Rational(1));
    scaled(without_both, Word{ys[1], ys[0]}, Rational(1));
    return out;
}

}  // namespace detail

/// Pairs (A_i, B_i) with x1 y1..yn x2 - x2 y1..yn x1 = sum A_i [x1,x2] B_i, grouped by B_i.
inline std::vector<std::pair<NcPoly, NcPoly>> lemma1_decompose(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("lemma1_decompose needs n >= 2");
    std::vector<Gen> ys;
    for (std::size_t j = 1; j <= n; ++j)
        ys.push_back(static_cast<Gen>(2 + j));
    std::map<Word, NcPoly> by_right;
    for (const auto& t : detail::skew_rewrite(ys)) {
        if (t.left.empty())
            throw std::logic_error("left factor of degree 0 in the rewriting");
        by_right[t.right].add_term(t.left, t.coeff);
    }
    std::vector<std::pair<NcPoly, NcPoly>> out;
    for (auto& [right, left] : by_right)
        if (!left.is_zero())
            out.emplace_back(std::move(left), NcPoly(right));
    return out;
}

inline NcPoly lemma1_defect(std::size_t n, const std::vector<std::pair<NcPoly, NcPoly>>& terms)
{
    const NcPoly c = commutator(NcPoly::gen(1), NcPoly::gen(2));
    NcPoly rhs;
    for (const auto& [a, b] : terms)
        rhs += a * c * b;
    return lemma1_lhs(n) - rhs;
}

// ---------------------------------------------------------------------------
// Factorization through the standard polynomial
// ---------------------------------------------------------------------------

enum class InterleaveVariant {
    disjoint_y,  // Y's in generators > n: sum c_i D_i S_n E_i
    in_x,        // Y's in x_1..x_n: S_n * D
};

struct StandardFactorization {
    std::size_t n = 0;
    std::vector<Word> ys;
    InterleaveVariant variant = InterleaveVariant::in_x;
    NcPoly lhs;
    std::vector<CommutatorTerm> pairs;  // coeff * D * S_n * E (disjoint_y)
    NcPoly right_factor;                // D (in_x)
    bool unique = false;
    bool verified = false;

    NcPoly rhs() const
    {
        const NcPoly s = standard_poly(n);
        if (variant == InterleaveVariant::in_x)
            return s * right_factor;
        NcPoly r;
        for (const auto& t : pairs)
            r += NcPoly(t.left) * s * NcPoly(t.right) * t.coeff;
        return r;
    }
};

/// sum over sigma of (-1)^sigma x_s(1) Y_1 x_s(2) ... Y_{n-1} x_s(n).
inline NcPoly interleaved_alternating_sum(std::size_t n, const std::vector<Word>& ys)
{
    if (n < 1 || ys.size() + 1 != n)
        throw std::invalid_argument("need exactly n-1 interleaving words");
    std::vector<Gen> perm(n);
    std::iota(perm.begin(), perm.end(), Gen{1});
    NcPoly f;
    do {
        Word w{perm[0]};
        for (std::size_t j = 1; j < n; ++j)
            w = w * ys[j - 1] * Word{perm[j]};
        f.add_term(w, Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

namespace detail {

/// All distinct orderings of a multiset of letters.
inline std::vector<Word> arrangements(std::vector<Gen> letters)
{
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

/// Quotient coordinates of multihomogeneous polynomials sharing one multidegree.
class HomogeneousQuotient {
public:
    HomogeneousQuotient(const NcPoly& sample, const RankOptions& opts)
    {
        const NcPoly lin = multilinearize(sample);
        const auto gs = lin.generators();
        order_.assign(gs.begin(), gs.end());
        degree_ = order_.size();
        check_rank_degree(degree_, opts);
        model_.emplace(degree_, clifford_pair(degree_), opts.seeds.empty() ? 0 : opts.seeds.front());
        multidegree_ = word_multidegree(sample.terms().begin()->first);
    }

    std::size_t degree() const { return degree_; }

    std::vector<Rational> coordinates(const NcPoly& f) const
    {
        if (f.is_zero())
            return std::vector<Rational>(model_->rank());
        if (multidegree(f) != multidegree_)
            throw std::logic_error("HomogeneousQuotient: multidegree mismatch");
        return model_->coordinates(standardize_generators(multilinearize(f), order_));
    }

private:
    std::vector<Gen> order_;
    std::size_t degree_ = 0;
    MultiDegree multidegree_;
    std::optional<EvaluationModel> model_;
};

}  // namespace detail

/*
 * Writes the interleaved alternating sum through S_n by solving an exact
 * linear system in the image of evaluation.  Variant detection: Y letters all
 * in x_1..x_n (or no letters at all) -> in_x; all above n -> disjoint_y.
 */
inline StandardFactorization factor_through_standard(std::size_t n, const std::vector<Word>& ys,
                                                     std::optional<InterleaveVariant> force = std::nullopt,
                                                     const RankOptions& opts = {})
{
    if (n < 2)
        throw std::invalid_argument("factor_through_standard needs n >= 2");
    if (ys.size() + 1 != n)
        throw std::invalid_argument("factor_through_standard needs exactly n-1 words");

    bool any_x = false, any_y = false;
    std::vector<Gen> y_letters;
    MultiDegree x_extra;
    for (const auto& w : ys) {
        for (Gen g : w.letters) {
            if (g <= n) {
                any_x = true;
                ++x_extra[g];
            } else {
                any_y = true;
                y_letters.push_back(g);
            }
        }
    }
    if (any_x && any_y)
        throw std::invalid_argument("inconsistent variable usage: interleaving words mix x_1..x_n with other generators");
    InterleaveVariant variant = any_y ? InterleaveVariant::disjoint_y : InterleaveVariant::in_x;
    if (force) {
        if ((*force == InterleaveVariant::disjoint_y && any_x) || (*force == InterleaveVariant::in_x && any_y))
            throw std::invalid_argument("inconsistent variable usage for the requested variant");
        variant = *force;
    }

    StandardFactorization out;
    out.n = n;
    out.ys = ys;
    out.variant = variant;
    out.lhs = interleaved_alternating_sum(n, ys);

    const NcPoly s = standard_poly(n);
    std::vector<NcPoly> candidates;
    std::vector<std::pair<Word, Word>> shapes;
    if (variant == InterleaveVariant::disjoint_y) {
        for (const Word& w : detail::arrangements(y_letters)) {
            for (std::size_t split = 0; split <= w.degree(); ++split) {
                Word d(std::vector<Gen>(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(split)));
                Word e(std::vector<Gen>(w.letters.begin() + static_cast<std::ptrdiff_t>(split), w.letters.end()));
                candidates.push_back(NcPoly(d) * s * NcPoly(e));
                shapes.emplace_back(std::move(d), std::move(e));
            }
        }
    } else {
        std::vector<Gen> extra;
        for (const auto& [g, e] : x_extra)
            extra.insert(extra.end(), e, g);
        for (const Word& w : detail::arrangements(extra)) {
            candidates.push_back(s * NcPoly(w));
            shapes.emplace_back(w, Word{});
        }
    }

    const detail::HomogeneousQuotient quotient(candidates.front(), opts);
    Matrix<Rational> cols;
    for (const auto& c : candidates)
        cols.push_back(quotient.coordinates(c));
    const auto x = solve_columns(cols, quotient.coordinates(out.lhs));
    if (!x)
        throw std::runtime_error("Lemma 3 violated: no factorization through S_" + std::to_string(n));
    out.unique = rational_rank(cols) == cols.size();

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if ((*x)[i].is_zero())
            continue;
        if (variant == InterleaveVariant::disjoint_y)
            out.pairs.push_back({(*x)[i], shapes[i].first, shapes[i].second});
        else
            out.right_factor.add_term(shapes[i].first, (*x)[i]);
    }

    const NcPoly defect = out.lhs - out.rhs();
    out.verified = defect.is_zero()
                   || is_weak_identity(defect, clifford_pair(quotient.degree()),
                                       std::max(quotient.degree(), default_degree_cap))
                          .holds;
    return out;
}

/// Whether a multilinear f of degree n is a consequence of the generators.
inline bool consequence_span_contains(const NcPoly& f, std::size_t n, const std::vector<NcPoly>& generators,
                                      const RankOptions& opts = {})
{
    check_rank_degree(n, opts);
    return ConsequenceSpan(n, generators).contains(f);
}

}  // namespace wid

#endif  // WID_STRUCTURE_HPP
