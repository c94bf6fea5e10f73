#ifndef WID_FREEALG_HPP
#define WID_FREEALG_HPP

#include <wid/scalars.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wid {

/// Generator index of the free algebra, x_1, x_2, ... (1-based).
using Gen = std::uint32_t;

/*
 * Monomial of K<X>.  The empty word is the unit.  Words compare
 * degree-lexicographically: shorter first, then letter indices left to right.
 */
struct Word {
    std::vector<Gen> letters;

    Word() = default;
    Word(std::initializer_list<Gen> l) : letters(l) { validate(); }
    explicit Word(std::vector<Gen> l) : letters(std::move(l)) { validate(); }

    std::size_t degree() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend Word operator*(const Word& a, const Word& b)
    {
        Word w;
        w.letters.reserve(a.letters.size() + b.letters.size());
        w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0)
            return c;
        return a.letters <=> b.letters;
    }

    Word reversed() const
    {
        Word w = *this;
        std::reverse(w.letters.begin(), w.letters.end());
        return w;
    }

    std::string str() const
    {
        if (letters.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i)
                s += "*";
            s += "x" + std::to_string(letters[i]);
        }
        return s;
    }

private:
    void validate() const
    {
        for (Gen g : letters)
            if (g == 0)
                throw std::invalid_argument("generator indices start at 1");
    }
};

/// Degree of each generator; absent generators have degree 0.
using MultiDegree = std::map<Gen, std::uint32_t>;

inline MultiDegree word_multidegree(const Word& w)
{
    MultiDegree d;
    for (Gen g : w.letters)
        ++d[g];
    return d;
}

inline std::uint32_t total_degree(const MultiDegree& d)
{
    std::uint32_t t = 0;
    for (const auto& [g, e] : d)
        t += e;
    return t;
}

/// Linear combination of generators, the image of one generator under a GL substitution.
template <typename C>
using LinearForm = std::map<Gen, C>;

/*
 * Sparse element of the free associative algebra with coefficients in C
 * (Rational or ParamPoly).  No zero coefficients are stored.
 */
template <typename C>
class BasicNcPoly {
public:
    using Coeff = C;
    using Terms = std::map<Word, C>;

    BasicNcPoly() = default;
    BasicNcPoly(const C& c)  // NOLINT(implicit): scalar multiple of the unit
    {
        add_term(Word{}, c);
    }
    BasicNcPoly(const Word& w, const C& c = C(1)) { add_term(w, c); }

    static BasicNcPoly gen(Gen g) { return BasicNcPoly(Word{g}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Word& w, const C& c)
    {
        if (wid::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (wid::is_zero(it->second))
                terms_.erase(it);
        }
    }

    BasicNcPoly operator-() const
    {
        BasicNcPoly r = *this;
        for (auto& [w, c] : r.terms_)
            c = -c;
        return r;
    }
    BasicNcPoly& operator+=(const BasicNcPoly& o)
    {
        for (const auto& [w, c] : o.terms_)
            add_term(w, c);
        return *this;
    }
    BasicNcPoly& operator-=(const BasicNcPoly& o)
    {
        for (const auto& [w, c] : o.terms_)
            add_term(w, -c);
        return *this;
    }
    BasicNcPoly& operator*=(const C& s)
    {
        if (wid::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_)
            c = c * s;
        return *this;
    }

    friend BasicNcPoly operator+(BasicNcPoly a, const BasicNcPoly& b) { return a += b; }
    friend BasicNcPoly operator-(BasicNcPoly a, const BasicNcPoly& b) { return a -= b; }
    friend BasicNcPoly operator*(BasicNcPoly a, const C& s) { return a *= s; }
    friend BasicNcPoly operator*(const C& s, BasicNcPoly a) { return a *= s; }

    friend BasicNcPoly operator*(const BasicNcPoly& f, const BasicNcPoly& g)
    {
        BasicNcPoly r;
        for (const auto& [wf, cf] : f.terms_)
            for (const auto& [wg, cg] : g.terms_)
                r.add_term(wf * wg, cf * cg);
        return r;
    }

    friend bool operator==(const BasicNcPoly& a, const BasicNcPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BasicNcPoly& a, const BasicNcPoly& b) { return !(a == b); }

    /// Generators occurring in some word, ascending.
    std::set<Gen> generators() const
    {
        std::set<Gen> s;
        for (const auto& [w, c] : terms_)
            s.insert(w.letters.begin(), w.letters.end());
        return s;
    }

    std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_)
            d = std::max(d, w.degree());
        return d;
    }

    bool is_multilinear() const
    {
        for (const auto& [w, c] : terms_) {
            for (const auto& [g, e] : word_multidegree(w))
                if (e != 1)
                    return false;
        }
        return true;
    }

private:
    Terms terms_;
};

using NcPoly = BasicNcPoly<Rational>;

template <typename C>
BasicNcPoly<C> commutator(const BasicNcPoly<C>& f, const BasicNcPoly<C>& g)
{
    return f * g - g * f;
}

template <typename C>
BasicNcPoly<C> jordan(const BasicNcPoly<C>& f, const BasicNcPoly<C>& g)
{
    return (f * g + g * f) * C(Rational(1, 2));
}

template <typename C>
BasicNcPoly<C> power(const BasicNcPoly<C>& f, unsigned e)
{
    BasicNcPoly<C> r(C(1));
    for (unsigned i = 0; i < e; ++i)
        r = r * f;
    return r;
}

/// (-1)^inv(p) for a permutation given as a sequence of distinct values.
template <typename T>
int permutation_sign(const std::vector<T>& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

/// Standard polynomial S_n in the given generators (x_1..x_n when omitted).
inline NcPoly standard_poly(const std::vector<Gen>& args)
{
    if (args.empty())
        throw std::invalid_argument("standard polynomial needs n >= 1");
    std::vector<std::size_t> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    NcPoly s;
    do {
        std::vector<Gen> letters;
        letters.reserve(args.size());
        for (std::size_t i : perm)
            letters.push_back(args[i]);
        s.add_term(Word(std::move(letters)), Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return s;
}

inline NcPoly standard_poly(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("standard polynomial needs n >= 1");
    std::vector<Gen> args(n);
    std::iota(args.begin(), args.end(), Gen{1});
    return standard_poly(args);
}

/// The generator [x_a^2, x_b] of the weak identities (defaults to [x_1^2, x_2]).
inline NcPoly square_commutator(Gen a = 1, Gen b = 2)
{
    NcPoly xa = NcPoly::gen(a);
    return commutator(xa * xa, NcPoly::gen(b));
}

/// Reversal involution: an anti-automorphism fixing every generator.
template <typename C>
BasicNcPoly<C> star(const BasicNcPoly<C>& f)
{
    BasicNcPoly<C> r;
    for (const auto& [w, c] : f.terms())
        r.add_term(w.reversed(), c);
    return r;
}

template <typename C>
MultiDegree multidegree(const BasicNcPoly<C>& f)
{
    if (f.is_zero())
        throw std::invalid_argument("multidegree of the zero polynomial");
    const Word* first = nullptr;
    MultiDegree d;
    for (const auto& [w, c] : f.terms()) {
        MultiDegree dw = word_multidegree(w);
        if (!first) {
            first = &w;
            d = std::move(dw);
        } else if (dw != d) {
            throw std::invalid_argument("not multihomogeneous: " + first->str() + " and " + w.str()
                                        + " have different multidegrees");
        }
    }
    return d;
}

template <typename C>
bool is_multihomogeneous(const BasicNcPoly<C>& f)
{
    if (f.is_zero())
        return true;
    const MultiDegree d = word_multidegree(f.terms().begin()->first);
    for (const auto& [w, c] : f.terms())
        if (word_multidegree(w) != d)
            return false;
    return true;
}

/// Multihomogeneous components keyed by multidegree.
template <typename C>
std::map<MultiDegree, BasicNcPoly<C>> multihomogeneous_components(const BasicNcPoly<C>& f)
{
    std::map<MultiDegree, BasicNcPoly<C>> parts;
    for (const auto& [w, c] : f.terms())
        parts[word_multidegree(w)].add_term(w, c);
    return parts;
}

/*
 * Algebra endomorphism induced by a linear substitution of generators.
 * Every generator of f must be mapped.
 */
template <typename C>
BasicNcPoly<C> substitute_linear(const BasicNcPoly<C>& f, const std::map<Gen, LinearForm<C>>& subst)
{
    BasicNcPoly<C> r;
    for (const auto& [w, c] : f.terms()) {
        // expand the product of the images letter by letter
        std::map<Word, C> acc{{Word{}, c}};
        for (Gen g : w.letters) {
            auto it = subst.find(g);
            if (it == subst.end())
                throw std::invalid_argument("substitute_linear: x" + std::to_string(g) + " is not mapped");
            std::map<Word, C> next;
            for (const auto& [pw, pc] : acc) {
                for (const auto& [h, hc] : it->second) {
                    if (wid::is_zero(hc))
                        continue;
                    Word nw = pw * Word{h};
                    auto [ni, ins] = next.try_emplace(std::move(nw), pc * hc);
                    if (!ins)
                        ni->second += pc * hc;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [aw, ac] : acc)
            r.add_term(aw, ac);
    }
    return r;
}

/// Generator renaming, the permutation-matrix case of substitute_linear.
template <typename C>
BasicNcPoly<C> rename(const BasicNcPoly<C>& f, const std::map<Gen, Gen>& to)
{
    BasicNcPoly<C> r;
    for (const auto& [w, c] : f.terms()) {
        Word nw;
        nw.letters.reserve(w.letters.size());
        for (Gen g : w.letters) {
            auto it = to.find(g);
            if (it == to.end())
                throw std::invalid_argument("rename: x" + std::to_string(g) + " is not mapped");
            nw.letters.push_back(it->second);
        }
        r.add_term(nw, c);
    }
    return r;
}

/// Linear part of f(x := x + fresh) in `fresh`: each occurrence of x replaced in turn.
template <typename C>
BasicNcPoly<C> polarize_once(const BasicNcPoly<C>& f, Gen x, Gen fresh)
{
    BasicNcPoly<C> r;
    for (const auto& [w, c] : f.terms()) {
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (w.letters[i] != x)
                continue;
            Word nw = w;
            nw.letters[i] = fresh;
            r.add_term(nw, c);
        }
    }
    return r;
}

/*
 * Full polarization of a multihomogeneous polynomial.  Each generator of
 * degree d > 1 (ascending) receives d-1 fresh generators, the smallest indices
 * not occurring in f, in increasing order.  The result is unscaled: x^2 maps
 * to x*x' + x'*x.
 */
template <typename C>
BasicNcPoly<C> multilinearize(const BasicNcPoly<C>& f)
{
    if (f.is_zero())
        return f;
    const MultiDegree d = multidegree(f);
    const std::set<Gen> used = f.generators();
    Gen next_fresh = 1;
    auto take_fresh = [&]() {
        while (used.count(next_fresh))
            ++next_fresh;
        return next_fresh++;
    };
    BasicNcPoly<C> r = f;
    for (const auto& [g, e] : d)
        for (std::uint32_t i = 1; i < e; ++i)
            r = polarize_once(r, g, take_fresh());
    return r;
}

/// The n! multilinear words in x_1..x_n, ordered lexicographically by permutation.
inline std::vector<Word> multilinear_words(std::size_t n, std::size_t cap = 8)
{
    if (n == 0)
        throw std::invalid_argument("multilinear_words: n must be positive");
    if (n > cap)
        throw std::invalid_argument("multilinear_words: degree " + std::to_string(n) + " exceeds cap "
                                    + std::to_string(cap));
    std::vector<Gen> perm(n);
    std::iota(perm.begin(), perm.end(), Gen{1});
    std::vector<Word> out;
    do {
        out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace wid

#endif  // WID_FREEALG_HPP
