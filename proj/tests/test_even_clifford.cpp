#include <doctest.h>

#include <random>

#include "octoforms/even_clifford.hpp"

using namespace octoforms;

namespace {

// <A, B> = tr(A^T B) / n on signed permutation matrices
Rational gram(const SparseMatrix& a, const SparseMatrix& b) {
    Rational s;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row(r)) s.add_product(v, b.at(r, c));
    return s / Rational(static_cast<long long>(a.rows()));
}

CDElement random_octonion(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rational> c;
    for (int i = 0; i < 8; ++i) c.emplace_back(d(rng));
    return CDElement(3, c);
}

// Gram–Schmidt-free orthonormal pair: a unit octonion and a unit multiple by
// an imaginary unit, both rational.
std::pair<CDElement, CDElement> orthonormal_pair(std::mt19937_64& rng) {
    // Pythagorean quadruples keep the norm rational: (1,2,2)/3
    static const int quads[][4] = {{1, 2, 2, 3}, {2, 3, 6, 7}, {1, 4, 8, 9}, {2, 6, 9, 11}};
    std::uniform_int_distribution<int> pick(0, 3), unit(1, 7), pos(0, 7);
    const auto& q = quads[pick(rng)];
    std::vector<Rational> c(8);
    std::size_t p0 = static_cast<std::size_t>(pos(rng)), p1 = (p0 + 3) % 8, p2 = (p0 + 5) % 8;
    c[p0] = Rational(q[0], q[3]);
    c[p1] = Rational(q[1], q[3]);
    c[p2] = Rational(q[2], q[3]);
    CDElement u(3, c);
    CDElement v = u * CDElement::unit(3, static_cast<std::size_t>(unit(rng)));
    return {u, v};
}

} // namespace

TEST_CASE("model sizes and generator algebra") {
    struct Case {
        ModelName name;
        std::size_t dim, rank;
    };
    for (Case c : {Case{ModelName::EIII, 32, 10}, Case{ModelName::EVI, 64, 12}, Case{ModelName::EVIII, 128, 16}}) {
        EvenCliffordModel m = build_model(c.name);
        CAPTURE(to_string(c.name));
        CHECK(m.ambient_dim == c.dim);
        CHECK(m.rank() == c.rank);
        const SparseMatrix id = SparseMatrix::identity(c.dim);
        for (std::size_t a = 0; a < m.rank(); ++a) {
            CHECK(m.generators[a] * m.generators[a] == (m.squares[a] > 0 ? id : -id));
            for (std::size_t b = 0; b < m.rank(); ++b) CHECK(gram(m.generators[a], m.generators[b]) == Rational(a == b));
        }
        for (const auto& j : lambda2_generators(m)) {
            CHECK(is_skew(j));
            CHECK(j * j == -id);
        }
    }
    CHECK(parse_model_name("eiii") == ModelName::EIII);
    CHECK_THROWS_AS(parse_model_name("g2"), std::invalid_argument);
}

TEST_CASE("EIII complex structure is the standard one") {
    EvenCliffordModel m = build_model(ModelName::EIII);
    const Matrix i = m.generators[0].to_dense();
    const Matrix id = Matrix::identity(16), z = Matrix::zero(16, 16);
    CHECK(i == block2x2(z, -id, id, z));
    CHECK(lambda2_generators(m).size() == 45);
}

TEST_CASE("Lie closures") {
    CHECK(lie_closure_dim(lambda2_generators(build_model(ModelName::EIII)), 200) == 45);
    CHECK(lie_closure_dim(lambda2_generators(build_model(ModelName::EVI)), 200) == 66);
    CHECK(lie_closure_dim(lambda2_generators(build_model(ModelName::EVIII)), 200) == 120);
}

TEST_CASE("EIII tau_2 = -3 omega^2") {
    EIIITau2 t = eiii_tau2();
    CHECK(t.tau2.grade() == 4);
    CHECK(t.omega.size() == 16);
    CHECK(t.identity_holds());
    // omega = sum e^{a, a+16} up to sign; omega^2 has C(16,2) terms
    CHECK(t.omega_sq.size() == 120);
}

TEST_CASE("m_uv") {
    const CDElement one = CDElement::unit(3, 0), i = CDElement::unit(3, 1);
    const Matrix id = Matrix::identity(16);
    CHECK(m_uv(one, i) * m_uv(one, i) == -id);
    CHECK(m_uv(one, one) * m_uv(one, one) != -id);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        auto [u, v] = orthonormal_pair(rng);
        REQUIRE(norm2(u) == Rational(1));
        REQUIRE(dot(u, v).is_zero());
        Matrix a = m_uv(u, v);
        CHECK(m_uv(v, u) == -a);
        CHECK(a * a == -id);
    }
}

TEST_CASE("grassmann_phi_apply") {
    std::mt19937_64 rng(4);
    auto [u, v] = orthonormal_pair(rng);
    std::vector<CDElement> t, s;
    for (int k = 0; k < 6; ++k) {
        t.push_back(random_octonion(rng));
        s.push_back(random_octonion(rng));
    }
    std::vector<CDElement> twice = grassmann_phi_apply(u, v, grassmann_phi_apply(u, v, t));
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(twice[k] == -t[k]);

    std::vector<CDElement> sum(t.size());
    const Rational c(5, 2);
    for (std::size_t k = 0; k < t.size(); ++k) sum[k] = t[k] + c * s[k];
    auto lhs = grassmann_phi_apply(u, v, sum);
    auto pt = grassmann_phi_apply(u, v, t), ps = grassmann_phi_apply(u, v, s);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(lhs[k] == pt[k] + c * ps[k]);

    std::vector<CDElement> pair = {t[0], t[1]};
    std::vector<Rational> x(t[0].coeffs().begin(), t[0].coeffs().end());
    x.insert(x.end(), t[1].coeffs().begin(), t[1].coeffs().end());
    std::vector<Rational> y = mat_vec(m_uv(u, v), x);
    auto out = grassmann_phi_apply(u, v, pair);
    CHECK(out[0] == CDElement(3, std::vector<Rational>(y.begin(), y.begin() + 8)));

    t.pop_back();
    CHECK_THROWS_AS(grassmann_phi_apply(u, v, t), std::invalid_argument);
}

TEST_CASE("structure census") {
    CensusReport r = structure_census();
    CHECK(r.ok());
    REQUIRE(r.rows.size() == 6);
    CHECK(r.rows[0].count + r.rows[1].count == 120);
    CHECK(r.rows[2].count > 21);
}
