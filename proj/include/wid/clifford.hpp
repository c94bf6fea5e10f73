#ifndef WID_CLIFFORD_HPP
#define WID_CLIFFORD_HPP

#include <wid/freealg.hpp>
#include <wid/scalars.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wid {

/*
 * Diagonal Gram values q_i = <e_i, e_i> of a non-degenerate symmetric form
 * on V_k, either generic (the parameters q_1..q_k) or explicit nonzero
 * rationals.
 */
class FormParams {
public:
    static constexpr std::size_t max_dim = 31;

    static FormParams symbolic(std::size_t k) { return FormParams(k, std::nullopt); }

    static FormParams explicit_values(std::vector<Rational> values)
    {
        for (const auto& v : values)
            if (v.is_zero())
                throw std::invalid_argument("degenerate form: zero Gram value");
        const std::size_t k = values.size();
        return FormParams(k, std::move(values));
    }

    std::size_t dim() const { return k_; }
    bool is_symbolic() const { return !values_.has_value(); }
    const std::optional<std::vector<Rational>>& values() const { return values_; }

    ParamPoly q(std::size_t i) const
    {
        check_index(i);
        if (values_)
            return ParamPoly((*values_)[i - 1]);
        return ParamPoly::param(i);
    }

    /// prod q_i^exps[i-1] as a coefficient.
    ParamPoly monomial(const ParamPoly::Exponents& exps, const Rational& c = Rational(1)) const
    {
        if (!values_)
            return ParamPoly::monomial(exps, c);
        Rational v = c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i])
                v *= (*values_)[i].pow(exps[i]);
        return ParamPoly(v);
    }

    friend bool operator==(const FormParams& a, const FormParams& b)
    {
        return a.k_ == b.k_ && a.values_ == b.values_;
    }

    std::string str() const
    {
        if (!values_)
            return "symbolic q1..q" + std::to_string(k_);
        std::string s;
        for (std::size_t i = 0; i < values_->size(); ++i)
            s += (i ? "," : "") + (*values_)[i].str();
        return s;
    }

    void check_index(std::size_t i) const
    {
        if (i == 0 || i > k_)
            throw std::out_of_range("basis index " + std::to_string(i) + " outside 1.."
                                    + std::to_string(k_));
    }

private:
    FormParams(std::size_t k, std::optional<std::vector<Rational>> values) : k_(k), values_(std::move(values))
    {
        if (k_ == 0)
            throw std::invalid_argument("Clifford dimension must be positive");
        if (k_ > max_dim)
            throw std::invalid_argument("Clifford dimension above " + std::to_string(max_dim));
    }

    std::size_t k_;
    std::optional<std::vector<Rational>> values_;
};

/// Basis element e_{i_1}...e_{i_m} (i_1 < ... < i_m); bit i-1 marks index i.
struct Blade {
    std::uint32_t mask = 0;

    static Blade of(std::initializer_list<std::size_t> indices)
    {
        Blade b;
        for (std::size_t i : indices) {
            if (i == 0 || i > FormParams::max_dim)
                throw std::out_of_range("blade index out of range");
            b.mask |= 1u << (i - 1);
        }
        return b;
    }

    std::size_t grade() const { return static_cast<std::size_t>(std::popcount(mask)); }
    std::size_t top_index() const { return static_cast<std::size_t>(std::bit_width(mask)); }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < 32; ++i)
            if (mask & (1u << i))
                r.push_back(i + 1);
        return r;
    }

    std::string str() const
    {
        if (mask == 0)
            return "1";
        std::string s = "e{";
        bool first = true;
        for (std::size_t i : indices()) {
            s += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    friend auto operator<=>(const Blade&, const Blade&) = default;
};

/*
 * Sign and contraction pattern of a product of basis blades, before the Gram
 * values are substituted.  Moving each index of b left past the larger
 * indices of a contributes one transposition each.
 */
struct BladeProduct {
    int sign = 1;
    Blade result;
    Blade contracted;
};

inline BladeProduct blade_product(Blade a, Blade b)
{
    BladeProduct p;
    std::uint32_t rest = b.mask;
    std::size_t swaps = 0;
    while (rest) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(rest));  // index j+1
        swaps += static_cast<std::size_t>(std::popcount(a.mask >> (j + 1)));
        rest &= rest - 1;
    }
    p.sign = (swaps & 1) ? -1 : 1;
    p.contracted.mask = a.mask & b.mask;
    p.result.mask = a.mask ^ b.mask;
    return p;
}

inline std::pair<ParamPoly, Blade> blade_mul(Blade a, Blade b, const FormParams& q)
{
    const std::uint32_t limit = q.dim() >= 32 ? ~0u : ((1u << q.dim()) - 1);
    if ((a.mask | b.mask) & ~limit)
        throw std::out_of_range("blade index exceeds Clifford dimension " + std::to_string(q.dim()));
    const BladeProduct p = blade_product(a, b);
    ParamPoly::Exponents e(p.contracted.top_index(), 0);
    for (std::size_t i : p.contracted.indices())
        e[i - 1] = 1;
    return {q.monomial(e, Rational(p.sign)), p.result};
}

/// Element of C_k: blades with parameter-polynomial coefficients.
class CliffordElt {
public:
    using Terms = std::map<Blade, ParamPoly>;

    explicit CliffordElt(std::size_t k) : k_(k) {}
    CliffordElt(std::size_t k, Blade b, const ParamPoly& c = ParamPoly(1)) : k_(k)
    {
        check_blade(b);
        add_term(b, c);
    }

    static CliffordElt unit(std::size_t k) { return CliffordElt(k, Blade{}); }
    static CliffordElt basis_vector(std::size_t k, std::size_t i)
    {
        if (i == 0 || i > k)
            throw std::out_of_range("basis vector e" + std::to_string(i) + " outside C_" + std::to_string(k));
        return CliffordElt(k, Blade::of({i}));
    }

    std::size_t dim() const { return k_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ParamPoly coeff(Blade b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? ParamPoly() : it->second;
    }

    /// True when the element is a multiple of the unit blade.
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.mask == 0); }

    void add_term(Blade b, const ParamPoly& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    CliffordElt& operator+=(const CliffordElt& o)
    {
        check_same(o);
        for (const auto& [b, c] : o.terms_)
            add_term(b, c);
        return *this;
    }
    CliffordElt& operator-=(const CliffordElt& o)
    {
        check_same(o);
        for (const auto& [b, c] : o.terms_)
            add_term(b, -c);
        return *this;
    }
    friend CliffordElt operator+(CliffordElt a, const CliffordElt& b) { return a += b; }
    friend CliffordElt operator-(CliffordElt a, const CliffordElt& b) { return a -= b; }
    friend CliffordElt operator*(const ParamPoly& s, CliffordElt a)
    {
        CliffordElt r(a.k_);
        for (const auto& [b, c] : a.terms_)
            r.add_term(b, s * c);
        return r;
    }

    friend bool operator==(const CliffordElt& a, const CliffordElt& b)
    {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElt& a, const CliffordElt& b) { return !(a == b); }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            std::string cs = c.str();
            bool negative = false;
            if (c.size() == 1 && c.terms().begin()->second.sign() < 0) {
                negative = true;
                cs = (-c).str();
            }
            std::string term;
            if (b.mask == 0)
                term = c.size() > 1 ? "(" + cs + ")" : cs;
            else if (cs == "1")
                term = b.str();
            else
                term = (c.size() > 1 ? "(" + cs + ")" : cs) + "*" + b.str();
            if (first)
                s = (negative ? "-" : "") + term;
            else
                s += (negative ? " - " : " + ") + term;
            first = false;
        }
        return s;
    }

    void check_blade(Blade b) const
    {
        if (b.top_index() > k_)
            throw std::out_of_range("blade " + b.str() + " outside C_" + std::to_string(k_));
    }

private:
    void check_same(const CliffordElt& o) const
    {
        if (o.k_ != k_)
            throw std::invalid_argument("Clifford dimension mismatch");
    }

    std::size_t k_;
    Terms terms_;
};

inline CliffordElt cliff_mul(const CliffordElt& a, const CliffordElt& b, const FormParams& q)
{
    if (a.dim() != b.dim() || a.dim() != q.dim())
        throw std::invalid_argument("Clifford dimension mismatch");
    CliffordElt r(a.dim());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            auto [c, blade] = blade_mul(ba, bb, q);
            r.add_term(blade, c * ca * cb);
        }
    }
    return r;
}

/// Vector of V_k in the orthogonal basis e_1..e_k.
struct VectorV {
    std::vector<ParamPoly> coords;
};

inline CliffordElt embed_vector(const VectorV& v, std::size_t k)
{
    if (v.coords.size() != k)
        throw std::invalid_argument("vector has " + std::to_string(v.coords.size()) + " coordinates, expected "
                                    + std::to_string(k));
    CliffordElt r(k);
    for (std::size_t i = 0; i < k; ++i)
        r.add_term(Blade::of({i + 1}), v.coords[i]);
    return r;
}

/// Unique algebra homomorphism K<X> -> C_k extending assign.
inline CliffordElt evaluate(const NcPoly& f, const std::map<Gen, CliffordElt>& assign, const FormParams& q)
{
    const std::size_t k = q.dim();
    for (Gen g : f.generators())
        if (!assign.count(g))
            throw std::invalid_argument("evaluate: no value for x" + std::to_string(g));
    for (const auto& [g, v] : assign)
        if (v.dim() != k)
            throw std::invalid_argument("evaluate: value for x" + std::to_string(g) + " is not in C_"
                                        + std::to_string(k));
    CliffordElt r(k);
    for (const auto& [w, c] : f.terms()) {
        CliffordElt t = CliffordElt::unit(k);
        for (Gen g : w.letters)
            t = cliff_mul(t, assign.at(g), q);
        r += ParamPoly(c) * t;
    }
    return r;
}

/*
 * Evaluation when every generator maps to a basis vector e_i.  Each word
 * then collapses to sign * prod q_i^a_i * blade, tracked without building
 * intermediate CliffordElt values.  basis_of[g] is the 1-based basis index
 * assigned to generator g.
 */
inline CliffordElt evaluate_on_basis(const NcPoly& f, const std::map<Gen, std::size_t>& basis_of,
                                     const FormParams& q)
{
    const std::size_t k = q.dim();
    std::map<std::pair<std::uint32_t, ParamPoly::Exponents>, Rational> acc;
    ParamPoly::Exponents exps(k);
    for (const auto& [w, c] : f.terms()) {
        std::uint32_t mask = 0;
        std::size_t swaps = 0;
        std::fill(exps.begin(), exps.end(), 0);
        for (Gen g : w.letters) {
            auto it = basis_of.find(g);
            if (it == basis_of.end())
                throw std::invalid_argument("evaluate: no value for x" + std::to_string(g));
            const std::size_t i = it->second;
            q.check_index(i);
            swaps += static_cast<std::size_t>(std::popcount(mask >> i));
            const std::uint32_t bit = 1u << (i - 1);
            if (mask & bit)
                ++exps[i - 1];
            mask ^= bit;
        }
        const Rational v = (swaps & 1) ? -c : c;
        auto [pos, inserted] = acc.try_emplace({mask, exps}, v);
        if (!inserted)
            pos->second += v;
    }
    CliffordElt r(k);
    for (const auto& [key, c] : acc)
        if (!c.is_zero())
            r.add_term(Blade{key.first}, q.monomial(key.second, c));
    return r;
}

}  // namespace wid

#endif  // WID_CLIFFORD_HPP
