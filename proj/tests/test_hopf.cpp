#include <doctest.h>

#include <random>

#include "octoforms/clifford.hpp"
#include "octoforms/hopf.hpp"

using namespace octoforms;

namespace {

std::vector<Rational> random_rational_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
    return v;
}

SpherePoint16 random_sphere_point(std::mt19937_64& rng) {
    return SpherePoint16::from_coords(rational_sphere_point(random_rational_vector(rng, 15)));
}

Rational dot_v(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
    return s;
}

} // namespace

TEST_CASE("Hopf action reproduces the spin9 matrices") {
    const CliffordSystem s = standard_system(StandardKind::spin9);
    CHECK(hopf_action(CDElement(3), 1) == s.mats[8]);
    CHECK(hopf_action(CDElement::unit(3, 0), 0) == s.mats[0]);
    for (std::size_t a = 1; a < 8; ++a) CHECK(hopf_action(CDElement::unit(3, a), 0) == s.mats[a]);
    CHECK_THROWS_AS(hopf_action(CDElement::unit(3, 1), 1), std::domain_error);
}

TEST_CASE("Hopf action is a symmetric involution on rational unit vectors") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> p = rational_sphere_point(random_rational_vector(rng, 8));
        CDElement u(3, std::vector<Rational>(p.begin(), p.begin() + 8));
        Matrix h = hopf_action(u, p[8]);
        CHECK(is_symmetric(h));
        CHECK(h * h == Matrix::identity(16));
    }
}

TEST_CASE("lambda coefficients") {
    SpherePoint16 p;
    p.x = CDElement::unit(3, 3);
    Lambda l = lambda_coeffs(p);
    for (std::size_t a = 0; a < 8; ++a) CHECK(l[a].is_zero());
    CHECK(l[8] == Rational(1));

    SpherePoint16 q;
    q.y = CDElement::unit(3, 6);
    l = hopf_map(q);
    for (std::size_t a = 0; a < 8; ++a) CHECK(l[a].is_zero());
    CHECK(l[8] == Rational(-1));

    SpherePoint16 off;
    off.x = CDElement::unit(3, 0, 2);
    CHECK_THROWS_AS(lambda_coeffs(off), std::domain_error);
}

TEST_CASE("reconstruction N = sum lambda_a I_a N at rational sphere points") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        SpherePoint16 p = random_sphere_point(rng);
        REQUIRE(p.norm2() == Rational(1));
        Lambda l = lambda_coeffs(p);
        auto s = sections(p);
        const std::vector<Rational> n = p.coords();

        Rational sum2;
        std::vector<Rational> rebuilt(16);
        for (std::size_t a = 0; a < 9; ++a) {
            sum2.add_product(l[a], l[a]);
            // oracle: lambda_a = <N, I_a N>
            CHECK(l[a] == dot_v(n, s[a]));
            for (std::size_t i = 0; i < 16; ++i) rebuilt[i].add_product(l[a], s[a][i]);
        }
        CHECK(sum2 == Rational(1));
        CHECK(rebuilt == n);
        if (t < 50)
            for (std::size_t a = 0; a < 9; ++a)
                for (std::size_t b = a; b < 9; ++b) CHECK(dot_v(s[a], s[b]) == Rational(a == b ? 1 : 0));
    }
}

TEST_CASE("lambda is homogeneous of degree two") {
    std::mt19937_64 rng(3);
    SpherePoint16 p = random_sphere_point(rng);
    const Rational t(7, 3);
    std::vector<Rational> c = p.coords();
    for (auto& v : c) v *= t;
    Lambda a = lambda_quadratic(p), b = lambda_quadratic(SpherePoint16::from_coords(c));
    for (std::size_t i = 0; i < 9; ++i) CHECK(b[i] == t * t * a[i]);
}

TEST_CASE("Hopf map is constant on the lines (x, x m)") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> mv = random_rational_vector(rng, 8);
        CDElement m(3, mv);
        Lambda first;
        for (int k = 0; k < 4; ++k) {
            CDElement x(3, random_rational_vector(rng, 8));
            if (x.is_zero()) continue;
            SpherePoint16 p{x, x * m};
            Lambda l = lambda_quadratic(p);
            for (auto& v : l) v /= p.norm2();
            if (k == 0)
                first = l;
            else
                CHECK(l == first);
        }
    }
    // m = i with x in {1, j}
    const CDElement i = CDElement::unit(3, 1);
    SpherePoint16 a{CDElement::unit(3, 0), CDElement::unit(3, 0) * i};
    SpherePoint16 b{CDElement::unit(3, 2), CDElement::unit(3, 2) * i};
    CHECK(lambda_quadratic(a) == lambda_quadratic(b));
    // left multiplication is not the fiber of this realization
    SpherePoint16 c{CDElement::unit(3, 2), i * CDElement::unit(3, 2)};
    CHECK(lambda_quadratic(a) != lambda_quadratic(c));
}

TEST_CASE("fibers are orthogonal to the sections") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        // p = (0, y) on l_inf, tangent (0, w) with <w, y> = 0
        std::vector<Rational> yv = rational_sphere_point(random_rational_vector(rng, 7));
        std::vector<Rational> w = random_rational_vector(rng, 8);
        Rational proj = dot_v(w, yv);
        for (std::size_t i = 0; i < 8; ++i) w[i] -= proj * yv[i];
        std::vector<Rational> pc(8), tc(8);
        pc.insert(pc.end(), yv.begin(), yv.end());
        tc.insert(tc.end(), w.begin(), w.end());
        SpherePoint16 p = SpherePoint16::from_coords(pc);
        CHECK(fiber_orthogonality_check(p, tc));
        CHECK_FALSE(fiber_orthogonality_check(p, sections(p)[0]));

        // transported by a Spin(9) reflection
        std::vector<Rational> ur = rational_sphere_point(random_rational_vector(rng, 8));
        Matrix h = hopf_action(CDElement(3, std::vector<Rational>(ur.begin(), ur.begin() + 8)), ur[8]);
        SpherePoint16 hp = SpherePoint16::from_coords(mat_vec(h, pc));
        CHECK(fiber_orthogonality_check(hp, mat_vec(h, tc)));
    }
}
