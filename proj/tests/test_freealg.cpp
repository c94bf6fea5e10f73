#include <wid/freealg.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace wid;
using testing_support::random_poly;

namespace {

NcPoly x(Gen g) { return NcPoly::gen(g); }

}  // namespace

TEST(Word, DeglexOrder)
{
    EXPECT_LT((Word{2}), (Word{1, 1}));
    EXPECT_LT((Word{1, 2}), (Word{2, 1}));
    EXPECT_LT(Word{}, (Word{1}));
    EXPECT_EQ((Word{1, 2} * Word{3}), (Word{1, 2, 3}));
    EXPECT_EQ((Word{1, 2, 3}).reversed(), (Word{3, 2, 1}));
}

TEST(Word, ZeroIndexRejected) { EXPECT_THROW((Word{0}), std::invalid_argument); }

TEST(NcPoly, CommutatorAndJordan)
{
    const NcPoly c = commutator(x(1), x(2));
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.coeff(Word{1, 2}), Rational(1));
    EXPECT_EQ(c.coeff(Word{2, 1}), Rational(-1));
    const NcPoly j = jordan(x(1), x(2));
    EXPECT_EQ(j.coeff(Word{1, 2}), Rational(Integer(1), Integer(2)));
    EXPECT_EQ(jordan(x(1), x(1)), x(1) * x(1));
}

TEST(NcPoly, CancellationRemovesTerms)
{
    const NcPoly f = x(1) * x(2) - x(1) * x(2);
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.size(), 0u);
}

TEST(NcPoly, RingAxiomsProperty)
{
    std::mt19937 rng(21);
    for (int i = 0; i < 500; ++i) {
        const NcPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(NcPoly, StarIsAnInvolutiveAntiAutomorphism)
{
    std::mt19937 rng(22);
    for (int i = 0; i < 300; ++i) {
        const NcPoly a = random_poly(rng), b = random_poly(rng);
        ASSERT_EQ(star(a * b), star(b) * star(a));
        ASSERT_EQ(star(star(a)), a);
        ASSERT_EQ(star(a + b), star(a) + star(b));
    }
}

TEST(StandardPoly, SmallCases)
{
    EXPECT_EQ(standard_poly(1), x(1));
    EXPECT_EQ(standard_poly(2), commutator(x(1), x(2)));
    EXPECT_EQ(standard_poly(3).size(), 6u);
    EXPECT_EQ(standard_poly(4).size(), 24u);
    EXPECT_THROW(standard_poly(0), std::invalid_argument);
}

TEST(StandardPoly, AlternatingProperty)
{
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<Gen> args(n);
        std::iota(args.begin(), args.end(), Gen{1});
        const NcPoly s = standard_poly(args);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                auto swapped = args;
                std::swap(swapped[i], swapped[j]);
                EXPECT_EQ(standard_poly(swapped), -s) << "n=" << n;
                auto repeated = args;
                repeated[j] = repeated[i];
                EXPECT_TRUE(standard_poly(repeated).is_zero()) << "n=" << n;
            }
        }
    }
}

TEST(StandardPoly, ExpansionAlongFirstLetter)
{
    // S_n = sum_i (-1)^(i-1) x_i S_{n-1}(x_1..^x_i..x_n)
    for (std::size_t n = 2; n <= 6; ++n) {
        NcPoly rhs;
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<Gen> rest;
            for (std::size_t j = 1; j <= n; ++j)
                if (j != i)
                    rest.push_back(static_cast<Gen>(j));
            rhs += x(static_cast<Gen>(i)) * standard_poly(rest) * Rational(i % 2 ? 1 : -1);
        }
        EXPECT_EQ(standard_poly(n), rhs);
    }
}

TEST(Multidegree, HomogeneousAndErrors)
{
    const NcPoly g = square_commutator();
    const MultiDegree d = multidegree(g);
    EXPECT_EQ(d.at(1), 2u);
    EXPECT_EQ(d.at(2), 1u);
    EXPECT_EQ(total_degree(d), 3u);
    EXPECT_THROW(multidegree(NcPoly{}), std::invalid_argument);
    try {
        multidegree(x(1) + x(1) * x(2));
        FAIL() << "expected a throw";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("x1"), std::string::npos);
    }
}

TEST(Multidegree, ComponentsSumBack)
{
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        const NcPoly f = random_poly(rng);
        NcPoly sum;
        for (const auto& [d, part] : multihomogeneous_components(f)) {
            EXPECT_TRUE(is_multihomogeneous(part));
            EXPECT_EQ(multidegree(part), d);
            sum += part;
        }
        EXPECT_EQ(sum, f);
    }
}

TEST(Multilinearize, FreshGeneratorsAreSmallestUnused)
{
    EXPECT_EQ(multilinearize(x(1) * x(1)), x(1) * x(2) + x(2) * x(1));
    // x2^2 x5: fresh index 1 is the smallest unused
    EXPECT_EQ(multilinearize(x(2) * x(2) * x(5)), x(2) * x(1) * x(5) + x(1) * x(2) * x(5));
    const NcPoly lin = multilinearize(square_commutator());
    EXPECT_TRUE(lin.is_multilinear());
    EXPECT_EQ(lin, (x(1) * x(3) + x(3) * x(1)) * x(2) - x(2) * (x(1) * x(3) + x(3) * x(1)));
    EXPECT_EQ(multilinearize(standard_poly(3)), standard_poly(3));
}

TEST(Multilinearize, OutputIsMultilinearOfSameDegree)
{
    std::mt19937 rng(24);
    std::uniform_int_distribution<Gen> gen(1, 3);
    std::uniform_int_distribution<std::size_t> len(1, 5);
    for (int i = 0; i < 200; ++i) {
        // a multihomogeneous polynomial: permutations of one random word
        Word w;
        for (std::size_t l = len(rng); l > 0; --l)
            w.letters.push_back(gen(rng));
        NcPoly f;
        auto letters = w.letters;
        std::sort(letters.begin(), letters.end());
        int sign = 1;
        do {
            f.add_term(Word(letters), Rational(sign));
            sign = -sign;
        } while (std::next_permutation(letters.begin(), letters.end()));
        const NcPoly lin = multilinearize(f);
        if (lin.is_zero())
            continue;
        EXPECT_TRUE(lin.is_multilinear());
        EXPECT_EQ(lin.max_degree(), w.degree());
        EXPECT_EQ(lin.generators().size(), w.degree());
    }
}

TEST(Multilinearize, RejectsInhomogeneous) { EXPECT_THROW(multilinearize(x(1) + x(2) * x(2)), std::invalid_argument); }

TEST(SubstituteLinear, IsAnAlgebraHomomorphism)
{
    std::mt19937 rng(25);
    for (int i = 0; i < 100; ++i) {
        std::map<Gen, LinearForm<Rational>> subst;
        for (Gen g = 1; g <= 4; ++g)
            for (Gen h = 1; h <= 3; ++h)
                subst[g][h] = testing_support::random_rational(rng, 2);
        const NcPoly a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(substitute_linear(a * b, subst), substitute_linear(a, subst) * substitute_linear(b, subst));
        EXPECT_EQ(substitute_linear(a + b, subst), substitute_linear(a, subst) + substitute_linear(b, subst));
    }
    EXPECT_THROW(substitute_linear(x(7), {}), std::invalid_argument);
}

TEST(MultilinearWords, CountAndOrder)
{
    const auto w = multilinear_words(3);
    ASSERT_EQ(w.size(), 6u);
    EXPECT_EQ(w.front(), (Word{1, 2, 3}));
    EXPECT_EQ(w.back(), (Word{3, 2, 1}));
    EXPECT_EQ(multilinear_words(6).size(), 720u);
    EXPECT_THROW(multilinear_words(9), std::invalid_argument);
}
