#ifndef WID_PAIRS_HPP
#define WID_PAIRS_HPP

#include <wid/clifford.hpp>
#include <wid/freealg.hpp>
#include <wid/scalars.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wid {

/// 2x2 matrix [[a, b], [c, d]].
template <typename T>
struct BasicMat2 {
    std::array<T, 4> e{T(0), T(0), T(0), T(0)};

    static BasicMat2 identity() { return {{T(1), T(0), T(0), T(1)}}; }

    const T& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
    T& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }

    friend BasicMat2 operator+(const BasicMat2& a, const BasicMat2& b)
    {
        return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
    }
    friend BasicMat2 operator-(const BasicMat2& a, const BasicMat2& b)
    {
        return {{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
    }
    friend BasicMat2 operator*(const BasicMat2& a, const BasicMat2& b)
    {
        return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
    }
    friend BasicMat2 operator*(const T& s, const BasicMat2& a)
    {
        return {{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
    }
    friend bool operator==(const BasicMat2& a, const BasicMat2& b) { return a.e == b.e; }

    T trace() const { return e[0] + e[3]; }
    T det() const { return e[0] * e[3] - e[1] * e[2]; }
    bool is_zero() const { return wid::is_zero(e[0]) && wid::is_zero(e[1]) && wid::is_zero(e[2]) && wid::is_zero(e[3]); }

    std::string str() const
    {
        using wid::to_string;
        return "[[" + to_string(e[0]) + ", " + to_string(e[1]) + "], [" + to_string(e[2]) + ", " + to_string(e[3])
               + "]]";
    }
};

using Mat2 = BasicMat2<ParamPoly>;

/// The sl_2 basis E, F, H.
template <typename T>
std::array<BasicMat2<T>, 3> sl2_basis()
{
    return {BasicMat2<T>{{T(0), T(1), T(0), T(0)}}, BasicMat2<T>{{T(0), T(0), T(1), T(0)}},
            BasicMat2<T>{{T(1), T(0), T(0), T(-1)}}};
}

inline const std::array<std::string, 3>& sl2_labels()
{
    static const std::array<std::string, 3> labels{"E", "F", "H"};
    return labels;
}

template <typename T>
BasicMat2<T> mat2_evaluate(const NcPoly& f, const std::map<Gen, BasicMat2<T>>& assign)
{
    for (Gen g : f.generators())
        if (!assign.count(g))
            throw std::invalid_argument("mat2_evaluate: no value for x" + std::to_string(g));
    BasicMat2<T> r;
    for (const auto& [w, c] : f.terms()) {
        BasicMat2<T> t = BasicMat2<T>::identity();
        for (Gen g : w.letters)
            t = t * assign.at(g);
        r = r + T(c) * t;
    }
    return r;
}

struct CliffordPair {
    FormParams form;
};
struct MatrixPair {};

/// Evaluation target (R, G): (C_k, V_k) or (M_2, sl_2).
using PairTarget = std::variant<CliffordPair, MatrixPair>;

inline PairTarget clifford_pair(std::size_t k) { return CliffordPair{FormParams::symbolic(k)}; }
inline PairTarget matrix_pair() { return MatrixPair{}; }

inline std::string describe(const PairTarget& t)
{
    if (const auto* c = std::get_if<CliffordPair>(&t)) {
        std::string s = "clifford:" + std::to_string(c->form.dim());
        if (!c->form.is_symbolic())
            s += ":" + c->form.str();
        return s;
    }
    return "m2";
}

/// Size of the substitution basis: k for (C_k, V_k), 3 for (M_2, sl_2).
inline std::size_t substitution_dim(const PairTarget& t)
{
    if (const auto* c = std::get_if<CliffordPair>(&t))
        return c->form.dim();
    return 3;
}

using PairValue = std::variant<CliffordElt, Mat2>;

inline std::string value_str(const PairValue& v)
{
    return std::visit([](const auto& x) { return x.str(); }, v);
}

inline bool value_is_zero(const PairValue& v)
{
    return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

struct SubstitutionElement {
    std::string label;
    PairValue value;
};

inline std::vector<SubstitutionElement> substitution_basis(const PairTarget& t)
{
    std::vector<SubstitutionElement> out;
    if (const auto* c = std::get_if<CliffordPair>(&t)) {
        const std::size_t k = c->form.dim();
        for (std::size_t i = 1; i <= k; ++i)
            out.push_back({"e" + std::to_string(i), CliffordElt::basis_vector(k, i)});
    } else {
        const auto basis = sl2_basis<ParamPoly>();
        for (std::size_t i = 0; i < 3; ++i)
            out.push_back({sl2_labels()[i], basis[i]});
    }
    return out;
}

/*
 * Value of f when generator gens[j] is replaced by basis element
 * tuple[j] (0-based position in substitution_basis).
 */
inline PairValue evaluate_on_tuple(const NcPoly& f, const PairTarget& target, const std::vector<Gen>& gens,
                                   const std::vector<std::size_t>& tuple)
{
    if (gens.size() != tuple.size())
        throw std::invalid_argument("evaluate_on_tuple: arity mismatch");
    if (const auto* c = std::get_if<CliffordPair>(&target)) {
        std::map<Gen, std::size_t> basis_of;
        for (std::size_t j = 0; j < gens.size(); ++j)
            basis_of[gens[j]] = tuple[j] + 1;
        return evaluate_on_basis(f, basis_of, c->form);
    }
    const auto basis = sl2_basis<Rational>();
    std::map<Gen, BasicMat2<Rational>> assign;
    for (std::size_t j = 0; j < gens.size(); ++j)
        assign[gens[j]] = basis.at(tuple[j]);
    const auto m = mat2_evaluate(f, assign);
    return Mat2{{ParamPoly(m.e[0]), ParamPoly(m.e[1]), ParamPoly(m.e[2]), ParamPoly(m.e[3])}};
}

/*
 * Constructive refutation: the multilinear component `polynomial` takes the
 * nonzero value `value` when each generator is replaced by the labelled
 * basis element.
 */
struct Witness {
    NcPoly polynomial;
    std::vector<Gen> generators;
    std::vector<std::size_t> basis_indices;  // 0-based into substitution_basis
    std::vector<std::string> labels;
    PairValue value;
};

struct WeakIdentityResult {
    bool holds = true;
    std::optional<Witness> witness;
    std::size_t components = 0;
    std::size_t evaluations = 0;
};

inline constexpr std::size_t default_degree_cap = 7;

/// Odometer over {0..base-1}^len in lexicographic order.
class TupleOdometer {
public:
    TupleOdometer(std::size_t base, std::size_t len) : base_(base), t_(len, 0), done_(base == 0 && len > 0) {}
    bool done() const { return done_; }
    const std::vector<std::size_t>& tuple() const { return t_; }
    void next()
    {
        for (std::size_t j = t_.size(); j-- > 0;) {
            if (++t_[j] < base_)
                return;
            t_[j] = 0;
        }
        done_ = true;
    }

private:
    std::size_t base_;
    std::vector<std::size_t> t_;
    bool done_;
};

namespace detail {

/*
 * Multilinear polynomial prepared for repeated evaluation at basis tuples:
 * letters become positions in the generator list and coefficients are
 * scaled to machine integers.  `fits` is false when the scaled coefficients
 * do not fit in 32 bits, in which case callers use the general evaluator.
 */
struct CompiledPoly {
    std::vector<std::vector<std::uint8_t>> words;
    std::vector<std::int64_t> coeffs;
    bool fits = true;

    CompiledPoly(const NcPoly& f, const std::vector<Gen>& gens)
    {
        std::map<Gen, std::uint8_t> pos;
        for (std::size_t j = 0; j < gens.size(); ++j)
            pos[gens[j]] = static_cast<std::uint8_t>(j);
        Integer l = 1;
        for (const auto& [w, c] : f.terms())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        for (const auto& [w, c] : f.terms()) {
            std::vector<std::uint8_t> ws;
            ws.reserve(w.letters.size());
            for (Gen g : w.letters)
                ws.push_back(pos.at(g));
            words.push_back(std::move(ws));
            const Integer z = c.num() * (l / c.den());
            if (!z.fits_sint_p() || abs(z) > Integer(1L << 31)) {
                fits = false;
                coeffs.push_back(0);
            } else {
                coeffs.push_back(z.get_si());
            }
        }
    }
};

/// Exact vanishing test for a generic-form Clifford target.
inline bool clifford_tuple_vanishes(const CompiledPoly& p, const std::vector<std::size_t>& tuple)
{
    struct Acc {
        std::uint32_t mask;
        std::array<std::uint8_t, 32> exps;
        __int128 sum;
    };
    std::vector<Acc> acc;
    std::array<std::uint8_t, 32> exps{};
    for (std::size_t r = 0; r < p.words.size(); ++r) {
        std::uint32_t mask = 0;
        unsigned swaps = 0;
        exps.fill(0);
        for (std::uint8_t pos : p.words[r]) {
            const std::size_t i = tuple[pos] + 1;
            swaps += static_cast<unsigned>(std::popcount(mask >> i));
            const std::uint32_t bit = 1u << (i - 1);
            if (mask & bit)
                ++exps[i - 1];
            mask ^= bit;
        }
        const __int128 v = (swaps & 1) ? -p.coeffs[r] : p.coeffs[r];
        bool found = false;
        for (auto& a : acc) {
            if (a.mask == mask && a.exps == exps) {
                a.sum += v;
                found = true;
                break;
            }
        }
        if (!found)
            acc.push_back({mask, exps, v});
    }
    for (const auto& a : acc)
        if (a.sum != 0)
            return false;
    return true;
}

/// Exact vanishing test on (M_2, sl_2) with integer arithmetic.
inline bool sl2_tuple_vanishes(const CompiledPoly& p, const std::vector<std::size_t>& tuple)
{
    static constexpr std::int64_t basis[3][4] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}};
    __int128 sum[4] = {0, 0, 0, 0};
    for (std::size_t r = 0; r < p.words.size(); ++r) {
        std::int64_t m[4] = {1, 0, 0, 1};
        for (std::uint8_t pos : p.words[r]) {
            const auto& x = basis[tuple[pos]];
            const std::int64_t n0 = m[0] * x[0] + m[1] * x[2], n1 = m[0] * x[1] + m[1] * x[3];
            const std::int64_t n2 = m[2] * x[0] + m[3] * x[2], n3 = m[2] * x[1] + m[3] * x[3];
            m[0] = n0;
            m[1] = n1;
            m[2] = n2;
            m[3] = n3;
        }
        for (int e = 0; e < 4; ++e)
            sum[e] += static_cast<__int128>(p.coeffs[r]) * m[e];
    }
    return sum[0] == 0 && sum[1] == 0 && sum[2] == 0 && sum[3] == 0;
}

}  // namespace detail

/*
 * Decides whether f is a weak identity of the pair.  Each multihomogeneous
 * component is fully multilinearized (valid in characteristic 0) and
 * evaluated on every tuple of substitution-basis elements (valid by
 * multilinearity).  The first nonzero evaluation in component order, then
 * lexicographic tuple order, is returned as the witness.
 */
inline WeakIdentityResult is_weak_identity(const NcPoly& f, const PairTarget& target,
                                           std::size_t degree_cap = default_degree_cap)
{
    if (f.is_zero())
        throw std::invalid_argument("is_weak_identity: zero polynomial");
    if (f.max_degree() > degree_cap)
        throw std::invalid_argument("is_weak_identity: degree " + std::to_string(f.max_degree())
                                    + " exceeds cap " + std::to_string(degree_cap));
    const auto basis = substitution_basis(target);
    const auto* cp = std::get_if<CliffordPair>(&target);
    WeakIdentityResult result;
    for (const auto& [deg, component] : multihomogeneous_components(f)) {
        ++result.components;
        const NcPoly lin = multilinearize(component);
        const auto gen_set = lin.generators();
        const std::vector<Gen> gens(gen_set.begin(), gen_set.end());
        const detail::CompiledPoly compiled(lin, gens);
        const bool fast = compiled.fits && (!cp || cp->form.is_symbolic());
        for (TupleOdometer odo(basis.size(), gens.size()); !odo.done(); odo.next()) {
            ++result.evaluations;
            if (fast) {
                const bool zero = cp ? detail::clifford_tuple_vanishes(compiled, odo.tuple())
                                     : detail::sl2_tuple_vanishes(compiled, odo.tuple());
                if (zero)
                    continue;
            }
            PairValue v = evaluate_on_tuple(lin, target, gens, odo.tuple());
            if (value_is_zero(v)) {
                if (fast)
                    throw std::logic_error("fast and general evaluation disagree");
                continue;
            }
            Witness w{lin, gens, odo.tuple(), {}, std::move(v)};
            for (std::size_t idx : odo.tuple())
                w.labels.push_back(basis[idx].label);
            result.holds = false;
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

}  // namespace wid

#endif  // WID_PAIRS_HPP
