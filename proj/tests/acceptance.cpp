// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <wid/wid.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "wid_cli.hpp"

using namespace wid;

namespace {

NcPoly x(Gen g) { return NcPoly::gen(g); }

/// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t restricted_tableau_sum(std::uint32_t n, std::size_t rows)
{
    std::uint64_t s = 0;
    for (const auto& p : oracle::all_partitions(n))
        if (p.size() <= rows)
            s += oracle::count_tableaux(p);
    return s;
}

Integer restricted_hook_sum(std::uint32_t n, std::size_t rows)
{
    Integer s = 0;
    for (const auto& p : partitions(n, rows))
        s += hook_dim(p);
    return s;
}

void generator_identity(Check& c)
{
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string pair = "clifford:" + std::to_string(k);
        const char* argv[] = {"wid", "check", "--pair", pair.c_str(), "[x1^2,x2]"};
        std::ostringstream out, err;
        const int code = cli::run(5, argv, out, err);
        const double t = seconds_since(t0);
        c.expect(code == 0 && out.str().find("check: holds") != std::string::npos, "k=" + std::to_string(k) + " not holds");
        c.expect(t < 1.0, "k=" + std::to_string(k) + " took " + std::to_string(t) + " s");
    }
}

void standard_values(Check& c)
{
    Integer fact = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
        fact *= static_cast<unsigned long>(n);
        std::map<Gen, CliffordElt> assign;
        for (std::size_t i = 1; i <= n; ++i)
            assign.emplace(static_cast<Gen>(i), CliffordElt::basis_vector(n, i));
        const CliffordElt v = evaluate(standard_poly(n), assign, FormParams::symbolic(n));
        c.expect(v == CliffordElt(n, Blade{(1u << n) - 1}, ParamPoly(Rational(fact))), "n=" + std::to_string(n) + ": " + v.str());
    }
}

void lemma2_constants(Check& c)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = lemma2_coeffs(2, 1), b = lemma2_coeffs(3, 1);
    c.expect(a.alpha == Rational(Integer(-1), Integer(2)) && a.beta == Rational(Integer(-1), Integer(2)), "(2,1)");
    c.expect(b.alpha == Rational(Integer(-2), Integer(3)) && b.beta == Rational(Integer(1), Integer(3)), "(3,1)");
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t k = 1; k < n; ++k)
            c.expect(lemma2_coeffs(n, k).alpha == lemma2_coeffs(n, n - k).beta,
                     "symmetry at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (std::size_t n = 2; n <= 5; ++n) {
        const PairTarget t = clifford_pair(n + 1);
        for (std::size_t k = 1; k < n; ++k)
            c.expect(is_weak_identity(eq5_defect(n, k), t).holds, "insertion defect (" + std::to_string(n) + "," + std::to_string(k) + ")");
        for (std::size_t i = 1; i <= n; ++i)
            c.expect(is_weak_identity(eq6_defect(n, i), t).holds, "commutation defect (" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
    const double t = seconds_since(t0);
    c.expect(t < 30.0, "took " + std::to_string(t) + " s");
}

void lemma1_terms(Check& c)
{
    const auto t0 = std::chrono::steady_clock::now();
    // x1 = 1, x2 = 2, y1 = 3, y2 = 4
    const Rational h(Integer(1), Integer(2));
    std::vector<std::pair<NcPoly, NcPoly>> published{
        {(x(3) * x(4) + x(4) * x(3)) * h, NcPoly(Rational(1))}, {x(3) * h, x(4)}, {x(4) * -h, x(3)}};
    auto got = lemma1_decompose(2);
    auto key = [](const std::pair<NcPoly, NcPoly>& p) { return format_expr(p.first) + "|" + format_expr(p.second); };
    auto by_key = [&](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(published.begin(), published.end(), by_key);
    std::sort(got.begin(), got.end(), by_key);
    c.expect(got == published, "n=2 terms differ from the published decomposition");
    for (std::size_t n = 3; n <= 4; ++n)
        c.expect(is_weak_identity(lemma1_defect(n, lemma1_decompose(n)), clifford_pair(n + 2), 8).holds,
                 "n=" + std::to_string(n) + " defect");
    const double t = seconds_since(t0);
    c.expect(t < 30.0, "took " + std::to_string(t) + " s");
}

void theorem1(Check& c)
{
    const std::size_t span[] = {2, 14, 94}, quotient[] = {4, 10, 26};
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = theorem1_check(n);
        const double t = seconds_since(t0);
        const std::string tag = "n=" + std::to_string(n);
        c.expect(r.holds, tag + " check failed");
        c.expect(r.span.rank == span[n - 3] && r.kernel.kernel_dim == span[n - 3], tag + " span/kernel dim");
        c.expect(r.kernel.quotient_dim == quotient[n - 3], tag + " quotient dim");
        c.expect(r.kernel.quotient_dim == oracle::count_involutions(static_cast<std::uint32_t>(n)), tag + " involution oracle");
        c.expect(t < 600.0, tag + " took " + std::to_string(t) + " s");
    }
}

void corollary1(Check& c)
{
    for (std::uint32_t n = 1; n <= 6; ++n)
        for (const auto& p : partitions(n))
            c.expect(hook_dim(p) == oracle::count_tableaux(p.parts()), "hook formula at " + p.str());
    const std::pair<std::size_t, std::size_t> cases[] = {{3, 2}, {4, 2}, {4, 3}, {5, 2}};
    for (const auto& [n, k] : cases) {
        const auto r = corollary1_check(n, k);
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        c.expect(r.holds, tag + " check failed");
        const auto nn = static_cast<std::uint32_t>(n);
        c.expect(Integer(static_cast<unsigned long>(r.kernel.quotient_dim)) == restricted_hook_sum(nn, k), tag + " hook sum");
        c.expect(r.kernel.quotient_dim == restricted_tableau_sum(nn, k), tag + " tableau sum");
    }
}

void corollary2(Check& c)
{
    const auto t0 = std::chrono::steady_clock::now();
    c.expect(is_weak_identity(square_commutator(), matrix_pair()).holds, "[x1^2,x2] on (M_2, sl_2)");
    c.expect(is_weak_identity(standard_poly(4), matrix_pair()).holds, "S_4 on (M_2, sl_2)");
    const auto r = evaluation_kernel(4, matrix_pair());
    c.expect(r.quotient_dim == 9, "quotient dim " + std::to_string(r.quotient_dim));
    c.expect(consequence_span_contains(standard_poly(4), 4, {square_commutator()}),
             "S_4 is not in the degree-4 consequence span of [x1^2,x2]");
    const double t = seconds_since(t0);
    c.expect(t < 60.0, "took " + std::to_string(t) + " s");
}

/// All sequences of n-1 words over `alphabet` with total degree <= 2.
std::vector<std::vector<Word>> interleavings(std::size_t n, const std::vector<Gen>& alphabet)
{
    std::vector<Word> words{Word{}};
    for (Gen a : alphabet) {
        words.push_back(Word{a});
        for (Gen b : alphabet)
            words.push_back(Word{a, b});
    }
    std::vector<std::vector<Word>> out;
    std::vector<Word> cur;
    auto rec = [&](auto&& self, std::size_t left) -> void {
        if (cur.size() == n - 1) {
            out.push_back(cur);
            return;
        }
        for (const auto& w : words) {
            if (w.degree() > left)
                continue;
            cur.push_back(w);
            self(self, left - w.degree());
            cur.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

void lemma3(Check& c)
{
    std::size_t cases = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        std::vector<Gen> xs, ys;
        for (std::size_t i = 1; i <= n; ++i)
            xs.push_back(static_cast<Gen>(i));
        ys = {static_cast<Gen>(n + 1), static_cast<Gen>(n + 2)};
        for (const auto& [alphabet, variant] :
             {std::pair{xs, InterleaveVariant::in_x}, std::pair{ys, InterleaveVariant::disjoint_y}}) {
            for (const auto& y : interleavings(n, alphabet)) {
                ++cases;
                std::string tag = "n=" + std::to_string(n) + " Y=";
                for (const auto& w : y)
                    tag += "[" + w.str() + "]";
                try {
                    const auto f = factor_through_standard(n, y, variant);
                    c.expect(f.verified, tag + " not verified");
                } catch (const std::exception& e) {
                    c.failures.push_back(tag + ": " + e.what());
                }
            }
        }
    }
    c.expect(cases > 0, "empty sweep");
}

void combinatorics(Check& c)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint32_t n = 1; n <= 8; ++n) {
        Integer squares = 0, plain = 0, fact = 1;
        for (std::uint32_t i = 2; i <= n; ++i)
            fact *= i;
        for (const auto& p : partitions(n)) {
            const Integer f = hook_dim(p);
            squares += f * f;
            plain += f;
        }
        c.expect(squares == fact, "sum of squares at n=" + std::to_string(n));
        c.expect(plain == Integer(static_cast<unsigned long>(oracle::count_involutions(n))),
                 "sum vs involutions at n=" + std::to_string(n));
    }
    const double t = seconds_since(t0);
    c.expect(t < 5.0, "took " + std::to_string(t) + " s");
}

void properties(Check& c)
{
    using namespace testing_support;
    std::mt19937 rng(2024);

    std::size_t triples = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
        const FormParams q = FormParams::symbolic(k);
        for (int i = 0; i < 200; ++i, ++triples) {
            const auto a = random_element(rng, k), b = random_element(rng, k), e = random_element(rng, k);
            if (cliff_mul(cliff_mul(a, b, q), e, q) != cliff_mul(a, cliff_mul(b, e, q), q))
                c.failures.push_back("associativity at k=" + std::to_string(k));
        }
    }
    c.expect(triples >= 1000, "too few triples");

    for (std::size_t k = 1; k <= 4; ++k) {
        const FormParams q = FormParams::symbolic(k);
        for (int i = 0; i < 50; ++i) {
            std::map<Gen, CliffordElt> assign;
            for (Gen g = 1; g <= 3; ++g)
                assign.emplace(g, random_element(rng, k, 2));
            const NcPoly f = random_poly(rng, 3, 3, 2), g = random_poly(rng, 3, 3, 2);
            if (evaluate(f * g, assign, q) != cliff_mul(evaluate(f, assign, q), evaluate(g, assign, q), q)
                || evaluate(f + g, assign, q) != evaluate(f, assign, q) + evaluate(g, assign, q))
                c.failures.push_back("evaluate homomorphism at k=" + std::to_string(k));
        }
    }

    for (int i = 0; i < 300; ++i) {
        const NcPoly a = random_poly(rng), b = random_poly(rng);
        if (star(a * b) != star(b) * star(a) || star(star(a)) != a)
            c.failures.push_back("star anti-automorphism");
    }

    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<Gen> args(n);
        std::iota(args.begin(), args.end(), Gen{1});
        const NcPoly s = standard_poly(args);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            auto sw = args;
            std::swap(sw[i], sw[i + 1]);
            auto rep = args;
            rep[i + 1] = rep[i];
            if (standard_poly(sw) != -s || !standard_poly(rep).is_zero())
                c.failures.push_back("alternation of S_" + std::to_string(n));
        }
    }

    for (int i = 0; i < 200; ++i) {
        const NcPoly f = random_poly(rng, 6, 5, 4);
        if (parse_poly(format_expr(f)) != f)
            c.failures.push_back("round trip of " + format_expr(f));
    }

    const std::vector<NcPoly> samples{square_commutator(), standard_poly(3), commutator(x(1), x(2)),
                                      commutator(x(1) * x(2) + x(2) * x(1), x(3))};
    std::uniform_int_distribution<int> small(-2, 2);
    int substitutions = 0;
    while (substitutions < 20) {
        Matrix<Rational> m(3, std::vector<Rational>(3));
        for (auto& row : m)
            for (auto& v : row)
                v = Rational(small(rng));
        if (rational_rank(m) != 3)
            continue;
        ++substitutions;
        std::map<Gen, LinearForm<Rational>> s;
        for (Gen g = 0; g < 3; ++g)
            for (Gen h = 0; h < 3; ++h)
                s[g + 1][h + 1] = m[g][h];
        for (const auto& f : samples)
            for (const PairTarget& t : {clifford_pair(2), clifford_pair(3), matrix_pair()})
                if (is_weak_identity(substitute_linear(f, s), t).holds != is_weak_identity(f, t).holds)
                    c.failures.push_back("GL-invariance of " + format_expr(f) + " on " + describe(t));
    }
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"generator identity holds on (C_k,V_k), k=1..6", generator_identity},
        {"S_n(e_1..e_n) = n! e_{1..n}, n<=6", standard_values},
        {"insertion constants, symmetry and defects", lemma2_constants},
        {"commutator rewriting terms and defects", lemma1_terms},
        {"consequences equal weak identities, n=3..5", theorem1},
        {"consequences with S_{k+1} equal weak identities", corollary1},
        {"(M_2, sl_2): identities, quotient dim, S_4 in span", corollary2},
        {"factorization through S_n, exhaustive sweep", lemma3},
        {"tableau sums: squares and involutions, n<=8", combinatorics},
        {"randomized property suites", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double t = seconds_since(t0);
        const bool ok = c.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << std::setw(2) << i + 1 << "] " << criteria[i].first << "  ("
                  << std::fixed << std::setprecision(2) << t << " s)";
        if (!ok) {
            std::cout << "\n        " << c.failures.front();
            if (c.failures.size() > 1)
                std::cout << " (+" << c.failures.size() - 1 << " more)";
        }
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
