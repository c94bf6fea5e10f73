#ifndef WID_SCALARS_HPP
#define WID_SCALARS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wid {

using Integer = mpz_class;

/*
 * Exact rational number in lowest terms with a positive denominator.
 * Zero is stored as 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                 // NOLINT(implicit)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(implicit)
    Rational(const Integer& v) : q_(v) {}       // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "a" or "a/b".
    static Rational parse(const std::string& text)
    {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(Integer(text));
            return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational literal: '" + text + "'");
        }
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { Rational r; r.q_ = -q_; return r; }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }
    Rational pow(unsigned e) const
    {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i)
            r *= *this;
        return r;
    }

    std::string str() const { return q_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& gmp() const { return q_; }

private:
    mpq_class q_;
};

inline Rational rat_normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

/*
 * Commutative polynomial in the form parameters q_1..q_k with rational
 * coefficients.  Exponent vectors are stored with trailing zeros stripped,
 * so the empty vector is the constant monomial; std::vector's lexicographic
 * comparison is then a monomial order (lex with q_1 > q_2 > ...).
 */
class ParamPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Terms = std::map<Exponents, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& c)  // NOLINT(implicit)
    {
        if (!c.is_zero())
            terms_.emplace(Exponents{}, c);
    }
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(implicit)
    ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT(implicit)

    /// The parameter q_i (1-based).
    static ParamPoly param(std::size_t i, std::uint32_t power = 1)
    {
        if (i == 0)
            throw std::out_of_range("parameters are indexed from 1");
        Exponents e(i, 0);
        e[i - 1] = power;
        return monomial(std::move(e), Rational(1));
    }

    static ParamPoly monomial(Exponents e, const Rational& c)
    {
        ParamPoly p;
        strip(e);
        if (!c.is_zero())
            p.terms_.emplace(std::move(e), c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const
    {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest parameter index that occurs (0 for constants).
    std::size_t max_param() const
    {
        std::size_t m = 0;
        for (const auto& [e, c] : terms_)
            m = std::max(m, e.size());
        return m;
    }

    ParamPoly operator-() const
    {
        ParamPoly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
    {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(mul_exponents(ea, eb), ca * cb);
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
    friend bool operator<(const ParamPoly& a, const ParamPoly& b) { return a.terms_ < b.terms_; }

    void add_term(const Exponents& e, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /*
     * Exact quotient a / b.  Throws std::domain_error when b does not divide
     * a.  Used by fraction-free elimination, where divisibility is guaranteed.
     */
    friend ParamPoly divide_exact(ParamPoly a, const ParamPoly& b)
    {
        if (b.is_zero())
            throw std::domain_error("ParamPoly division by zero");
        const auto& [lead_e, lead_c] = *b.terms_.rbegin();
        ParamPoly quotient;
        while (!a.is_zero()) {
            const auto& [ae, ac] = *a.terms_.rbegin();
            Exponents qe(std::max(ae.size(), lead_e.size()), 0);
            for (std::size_t i = 0; i < qe.size(); ++i) {
                std::uint32_t x = i < ae.size() ? ae[i] : 0;
                std::uint32_t y = i < lead_e.size() ? lead_e[i] : 0;
                if (x < y)
                    throw std::domain_error("ParamPoly division is not exact");
                qe[i] = x - y;
            }
            ParamPoly t = monomial(std::move(qe), ac / lead_c);
            quotient += t;
            a -= t * b;
        }
        return quotient;
    }

    /*
     * Ring homomorphism to the rationals.  assign[i-1] is the value of q_i;
     * every parameter occurring in the polynomial must be covered.
     */
    Rational specialize(const std::vector<Rational>& assign) const
    {
        Rational sum;
        for (const auto& [e, c] : terms_) {
            if (e.size() > assign.size())
                throw std::invalid_argument("specialize: no value for q" + std::to_string(e.size()));
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i])
                    t *= assign[i].pow(e[i]);
            sum += t;
        }
        return sum;
    }

    Rational specialize(const std::map<std::size_t, Rational>& assign) const
    {
        std::vector<Rational> dense(max_param());
        for (std::size_t i = 0; i < dense.size(); ++i) {
            bool used = false;
            for (const auto& [e, c] : terms_)
                used = used || (i < e.size() && e[i] != 0);
            if (!used)
                continue;
            auto it = assign.find(i + 1);
            if (it == assign.end())
                throw std::invalid_argument("specialize: no value for q" + std::to_string(i + 1));
            dense[i] = it->second;
        }
        return specialize(dense);
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i])
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += "q" + std::to_string(i + 1);
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            Rational mag = c.abs();
            std::string term;
            if (mono.empty())
                term = mag.str();
            else if (mag.is_one())
                term = mono;
            else
                term = mag.str() + "*" + mono;
            if (first)
                out = (c.sign() < 0 ? "-" : "") + term;
            else
                out += (c.sign() < 0 ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

    static Exponents mul_exponents(const Exponents& a, const Exponents& b)
    {
        Exponents r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] += b[i];
        return r;
    }

private:
    static void strip(Exponents& e)
    {
        while (!e.empty() && e.back() == 0)
            e.pop_back();
    }

    Terms terms_;
};

inline Rational param_specialize(const ParamPoly& p, const std::map<std::size_t, Rational>& assign)
{
    return p.specialize(assign);
}

// Coefficient-ring hooks used by the generic containers and eliminators.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const ParamPoly& p) { return p.str(); }

inline Integer divide_exact(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace wid

#endif  // WID_SCALARS_HPP
