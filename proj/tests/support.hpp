#ifndef WID_TESTS_SUPPORT_HPP
#define WID_TESTS_SUPPORT_HPP

#include <wid/wid.hpp>

#include <random>
#include <vector>

namespace testing_support {

using namespace wid;

inline Rational random_rational(std::mt19937& rng, int range = 4)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Word random_word(std::mt19937& rng, Gen max_gen, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Gen> gen(1, max_gen);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i)
        w.letters.push_back(gen(rng));
    return w;
}

inline NcPoly random_poly(std::mt19937& rng, Gen max_gen = 4, std::size_t max_terms = 4, std::size_t max_len = 3)
{
    std::uniform_int_distribution<std::size_t> terms(0, max_terms);
    NcPoly f;
    for (std::size_t i = terms(rng); i > 0; --i)
        f.add_term(random_word(rng, max_gen, max_len), random_rational(rng));
    return f;
}

/// Random nonzero multilinear polynomial in generators 1..n.
inline NcPoly random_multilinear(std::mt19937& rng, std::size_t n, std::size_t max_terms = 5)
{
    const auto words = multilinear_words(n);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1), terms(1, max_terms);
    NcPoly f;
    while (f.is_zero())
        for (std::size_t i = terms(rng); i > 0; --i)
            f.add_term(words[pick(rng)], random_rational(rng));
    return f;
}

inline ParamPoly random_param_poly(std::mt19937& rng, std::size_t k)
{
    std::uniform_int_distribution<std::uint32_t> exp(0, 1);
    std::uniform_int_distribution<int> terms(0, 2);
    ParamPoly p;
    for (int t = terms(rng); t >= 0; --t) {
        ParamPoly::Exponents e(k);
        for (auto& x : e)
            x = exp(rng);
        p += ParamPoly::monomial(e, random_rational(rng, 3));
    }
    return p;
}

inline CliffordElt random_element(std::mt19937& rng, std::size_t k, std::size_t max_terms = 3)
{
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << k) - 1);
    std::uniform_int_distribution<std::size_t> terms(1, max_terms);
    CliffordElt a(k);
    for (std::size_t i = terms(rng); i > 0; --i)
        a.add_term(Blade{mask(rng)}, random_param_poly(rng, k));
    return a;
}

inline CliffordElt random_vector(std::mt19937& rng, std::size_t k)
{
    VectorV v;
    for (std::size_t i = 0; i < k; ++i)
        v.coords.push_back(ParamPoly(random_rational(rng, 3)));
    return embed_vector(v, k);
}

}  // namespace testing_support

#endif  // WID_TESTS_SUPPORT_HPP
