#include "doctest.h"

#include <cmath>
#include <random>

#include "octoforms/canonical_forms.hpp"

using namespace octoforms;

TEST_CASE("characteristic polynomial of psi") {
    const auto& t = psi_charpoly();
    REQUIRE(t.size() == 9);
    for (std::size_t j : {0u, 1u, 2u, 4u, 5u, 6u, 8u}) {
        CAPTURE(j + 1);
        CHECK(t[j].is_zero());
    }
    CHECK(t[3].grade() == 8);
    CHECK(t[7].grade() == 16);
    CHECK(tau4_direct(psi_matrix()) == t[3]);
}

TEST_CASE("spin9 form normalization") {
    const Multivector& phi = spin9_form();
    CHECK(phi.size() == 702);
    CHECK(coefficient_gcd(phi) == Rational(1));
    CHECK(coefficient_gcd(psi_charpoly()[3]) == Rational(360));
    for (const auto& [m, c] : phi.terms()) CHECK(c.is_integer());
    Multivector top = wedge(phi, phi);
    CHECK(top.size() == 1);
    CHECK(top.grade() == 16);
}

TEST_CASE("cgm form equals -4 tau4") {
    Multivector cgm = cgm_form();
    CHECK(cgm == psi_charpoly()[3] * Rational(-4));
    CHECK(cgm.size() == 702);
    WedgeAccumulator acc(16);
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = a + 1; b < 9; ++b) acc.add_wedge(psi_matrix().at(a, b), psi_matrix().at(a, b));
    CHECK(acc.take().is_zero());
}

TEST_CASE("F = 2P^2 - 4Q") {
    FpqValues zero = fpq_values(Matrix(9, 9));
    CHECK(zero.f.is_zero());
    CHECK(zero.p.is_zero());
    CHECK(zero.q.is_zero());
    Matrix x(9, 9);
    x(0, 1) = 1;
    FpqValues one = fpq_values(x);
    CHECK(one.f == Rational(2));
    CHECK(one.p == Rational(1));
    CHECK(one.q == Rational(0));
    FpqReport rep = fpq_identity_check(100, 1);
    CHECK(rep.trials == 100);
    CHECK(rep.ok());
    CHECK_THROWS(fpq_identity_check(0, 1));
}

TEST_CASE("octonionic forms") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-2, 2);
    auto rnd_form = [&](std::size_t grade) {
        OctForm f(6);
        for (int t = 0; t < 4; ++t) {
            BladeMask m = 0;
            while (static_cast<std::size_t>(blade_grade(m)) < grade) m |= BladeMask{1} << (rng() % 6);
            CDElement c(3);
            for (std::size_t i = 0; i < 8; ++i) c[i] = d(rng);
            f.add(m, c);
        }
        return f;
    };
    for (int t = 0; t < 20; ++t) {
        std::size_t k = 1 + t % 2, l = 1 + (t / 2) % 3;
        OctForm a = rnd_form(k), b = rnd_form(l);
        CHECK(a.conj().conj() == a);
        OctForm lhs = oct_wedge(a, b).conj();
        OctForm rhs = oct_wedge(b.conj(), a.conj());
        if ((k * l) % 2) rhs = Rational(-1) * rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("octonionic 8-form") {
    KotrbatyForms k = kotrbaty_psi8();
    CHECK(k.psi40.grade() == 4);
    CHECK(k.psi31.grade() == 4);
    CHECK(k.psi8.grade() == 8);
    CHECK(k.psi8.is_real());
    CHECK(k.psi8_real == spin9_form() * Rational(-2880));
}

TEST_CASE("tau8 and the top-degree ratio") {
    Tau8Report r = tau8_and_ratio();
    CHECK_FALSE(r.tau8_top.is_zero());
    CHECK_FALSE(r.ratio.is_zero());
    CHECK(r.ratio == r.tau4_sq_top / r.tau8_top);
}

TEST_CASE("pontrjagin table") {
    PontrjaginReport p = pontrjagin_report();
    REQUIRE(p.manifold.size() == 4);
    CHECK(p.manifold[0].coeff.is_zero());
    CHECK(p.manifold[2].coeff.is_zero());
    CHECK(p.manifold[1].coeff == Rational(-45, 2));
    CHECK(p.manifold[1].pi_power == -4);
    CHECK(p.manifold[1].form == "Phi");
    CHECK(p.manifold[3].coeff == Rational(-13, 256));
    CHECK(p.manifold[3].pi_power == -8);
    CHECK(p.manifold[3].form == "tau8");
    CHECK(p.generator[0].coeff == Rational(-15, 4));
    CHECK(p.generator[1].coeff == Rational(-1, 96));
    CHECK(p.generator[2].coeff == Rational(-1, 768));
}

TEST_CASE("line volume form") {
    // (u, r) = (0, 1): the line {(x, 0)}, volume form e^{1..8}
    double u[8] = {};
    auto f = line_volume_form(u, 1.0);
    const auto& blades = grade8_blades();
    REQUIRE(blades.size() == 12870);
    CHECK(blades.front() == blade_mask({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(blades.back() == blade_mask({9, 10, 11, 12, 13, 14, 15, 16}));
    CHECK(f[0] == doctest::Approx(1.0));
    double rest = 0;
    for (std::size_t s = 1; s < f.size(); ++s) rest += std::abs(f[s]);
    CHECK(rest == doctest::Approx(0.0));
    // (u, r) = (1, 0): the line {(x, x)}, basis (e_i, e_i)/sqrt 2; by brute
    // force each coefficient is det of a 0/1 column selection, scaled 2^-4
    u[0] = 1.0;
    f = line_volume_form(u, 0.0);
    // coefficient on e^{1..8} is (1/sqrt 2)^8
    CHECK(f[0] == doctest::Approx(1.0 / 16));
    // a decomposable unit 8-vector: the Plücker coordinates have unit norm
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (int t = 0; t < 5; ++t) {
        double v[9], n = 0;
        for (double& x : v) {
            x = g(rng);
            n += x * x;
        }
        for (double& x : v) x /= std::sqrt(n);
        f = line_volume_form(v, v[8]);
        double norm = 0;
        for (double x : f) norm += x * x;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("berger monte carlo is deterministic and proportional") {
    BergerResult a = berger_mc(20000, 42, 1);
    BergerResult b = berger_mc(20000, 42, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
    // orientation of the lines gives the opposite sign to Phi
    CHECK(std::abs(a.cosine) > 0.9);
    CHECK(a.scale < 0);

    // <p^* nu_l, Phi> is the same for every line, so the fitted scale is
    // exact: -14 (the e^{1..8} coefficient) over |Phi|^2
    double phi2 = 0;
    for (const auto& [blade, c] : spin9_form().terms()) phi2 += c.to_double() * c.to_double();
    CHECK(a.scale == doctest::Approx(-14.0 / phi2).epsilon(1e-9));
    CHECK(phi2 == 1848.0);
    CHECK_THROWS(berger_mc(0, 1, 1));
}
