#include "doctest.h"

#include <random>

#include "octoforms/canonical_forms.hpp"
#include "octoforms/clifford.hpp"
#include "octoforms/exterior.hpp"
#include "printed_tables.hpp"

using namespace octoforms;

TEST_CASE("standard systems verify") {
    for (auto kind : {StandardKind::u1, StandardKind::pauli_U2, StandardKind::quaternionic_Sp2Sp1, StandardKind::spin9}) {
        CliffordSystem c = standard_system(kind);
        CHECK(verify(c).ok());
        for (std::size_t a = 0; a < c.mats.size(); ++a)
            for (std::size_t b = a + 1; b < c.mats.size(); ++b) CHECK(trace(c.mats[a] * c.mats[b]).is_zero());
    }
    CliffordSystem s9 = standard_system(StandardKind::spin9);
    CHECK(s9.n == 16);
    CHECK(s9.m() == 8);
    Matrix i9 = block2x2(Matrix::identity(8), Matrix::zero(8, 8), Matrix::zero(8, 8), -Matrix::identity(8));
    CHECK(s9.mats[8] == i9);
    CliffordSystem q = standard_system(StandardKind::quaternionic_Sp2Sp1);
    CHECK(q.mats[4] == block2x2(Matrix::identity(4), Matrix::zero(4, 4), Matrix::zero(4, 4), -Matrix::identity(4)));
    CHECK(parse_standard_kind("pauli") == StandardKind::pauli_U2);
    CHECK_THROWS(parse_standard_kind("g2"));
}

TEST_CASE("verify reports the failing axiom") {
    CliffordSystem bad{2, {Matrix::identity(2), Matrix::identity(2)}};
    CliffordReport rep = verify(bad);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.anticommuting);
    CHECK(rep.symmetric);
    CHECK_THROWS(extend(bad));
    CliffordSystem skew{2, {Matrix{{0, 1}, {-1, 0}}}};
    CHECK_FALSE(verify(skew).symmetric);
}

TEST_CASE("delta table and recursion") {
    const std::size_t table[] = {1, 2, 4, 4, 8, 8, 8, 8};
    for (std::size_t m = 1; m <= 8; ++m) CHECK(delta(m) == table[m - 1]);
    CHECK(delta(9) == 16);
    CHECK(delta(17) == 256);
    CHECK(delta(12) == 16 * delta(4));
    CHECK_THROWS(delta(0));
}

TEST_CASE("extension") {
    CliffordSystem c9 = extend(standard_system(StandardKind::spin9));
    CHECK(c9.n == 32);
    CHECK(c9.mats.size() == 10);
    CHECK(verify(c9).ok());
    CliffordSystem c3 = extend(standard_system(StandardKind::pauli_U2));
    CHECK(c3.n == 8);
    CHECK(c3.m() == 3);
    CHECK(verify(c3).ok());
    // the optional extra endomorphism: pauli -> C4 on R^8
    CliffordSystem c4 = extend(standard_system(StandardKind::pauli_U2), ExtraUnits{2, {3}});
    CHECK(c4.m() == 4);
    CHECK(c4.n == 2 * delta(4));
    // an extra unit that breaks anticommutation is rejected
    CHECK_THROWS_AS(extend(standard_system(StandardKind::pauli_U2), ExtraUnits{2, {1}}), std::domain_error);
    // C1 -> C2 -> C3 climbs the delta(m) dimensions
    CliffordSystem c = standard_system(StandardKind::u1);
    for (std::size_t m = 2; m <= 3; ++m) {
        c = extend(c);
        CHECK(c.m() == m);
        CHECK(c.n == 2 * delta(m));
    }
}

TEST_CASE("trace invariant") {
    Rational t9 = trace_invariant(standard_system(StandardKind::spin9));
    CHECK(abs(t9) == Rational(2 * delta(8)));
    CHECK(abs(trace_invariant(standard_system(StandardKind::quaternionic_Sp2Sp1))) == Rational(2 * delta(4)));
    CHECK(trace_invariant(standard_system(StandardKind::pauli_U2)).is_zero());
}

TEST_CASE("compositions and independence counts") {
    CliffordSystem s9 = standard_system(StandardKind::spin9);
    auto j2 = all_compositions(s9, 2);
    auto j3 = all_compositions(s9, 3);
    CHECK(j2.size() == 36);
    CHECK(j3.size() == 84);
    for (const auto& j : j2) {
        CHECK(is_skew(j));
        CHECK(j * j == -Matrix::identity(16));
    }
    CHECK(independence_count(j2) == 36);
    CHECK(independence_count(j3) == 84);
    std::vector<Matrix> all = j2;
    all.insert(all.end(), j3.begin(), j3.end());
    CHECK(independence_count(all) == 120);
    std::vector<Matrix> dup{Matrix::identity(3), Matrix::identity(3)};
    CHECK(independence_count(dup) == 1);

    CliffordSystem c6 = c6_system();
    CHECK(verify(c6).ok());
    CHECK(c6.m() == 6);
    CHECK(c6.n == 2 * delta(6));
    auto t6 = all_compositions(c6, 3);
    CHECK(t6.size() == 35);
    CHECK(independence_count(t6) == 35);

    const std::size_t idx[] = {0, 1};
    CHECK(compose_J(s9, idx) == s9.mats[0] * s9.mats[1]);
    const std::size_t bad[] = {1, 1};
    CHECK_THROWS(compose_J(s9, bad));
}

TEST_CASE("blade helpers") {
    CHECK(blade_indices(blade_mask({2, 5, 9})) == std::vector<std::size_t>{2, 5, 9});
    CHECK(blade_grade(blade_mask({1, 100, 128})) == 3);
    CHECK_THROWS(blade_mask({3, 2}));
    CHECK_THROWS(blade_mask({0}));
    CHECK(blade_lex_less(blade_mask({1, 2}), blade_mask({1, 3})));
    CHECK(blade_lex_less(blade_mask({1, 9}), blade_mask({2, 3})));
    CHECK(blade_lex_less(blade_mask({1, 2}), blade_mask({1, 2, 3})));
    CHECK_FALSE(blade_lex_less(blade_mask({2}), blade_mask({1, 5})));
    CHECK(merge_sign(blade_mask({2}), blade_mask({1})) == -1);
    CHECK(merge_sign(blade_mask({1, 3}), blade_mask({2})) == -1);
    CHECK(merge_sign(blade_mask({3, 4}), blade_mask({1, 2})) == 1);
}

namespace {

// merge-parity oracle: sort a concatenated index list by counting inversions
Multivector wedge_oracle(const Multivector& a, const Multivector& b) {
    Multivector out(a.n());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto ia = blade_indices(ma), ib = blade_indices(mb);
            ia.insert(ia.end(), ib.begin(), ib.end());
            out += Multivector::monomial(a.n(), ia, ca * cb);
        }
    return out;
}

Multivector random_form(std::mt19937_64& rng, std::size_t n, std::size_t grade, std::size_t terms) {
    std::uniform_int_distribution<std::size_t> idx(1, n);
    std::uniform_int_distribution<int> c(-3, 3);
    Multivector out(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::size_t> ind;
        while (ind.size() < grade) {
            std::size_t i = idx(rng);
            if (std::find(ind.begin(), ind.end(), i) == ind.end()) ind.push_back(i);
        }
        out += Multivector::monomial(n, ind, c(rng));
    }
    return out;
}

} // namespace

TEST_CASE("wedge product") {
    Multivector e1 = Multivector::monomial(4, {1}), e2 = Multivector::monomial(4, {2});
    CHECK(wedge(e1, e2) == Multivector::monomial(4, {1, 2}));
    CHECK(wedge(e2, e1) == Multivector::monomial(4, {1, 2}, -1));
    CHECK(wedge(Multivector::monomial(4, {1, 2}), Multivector::monomial(4, {1, 2})).is_zero());
    CHECK(Multivector::monomial(4, {2, 1, 2}).is_zero());
    CHECK_THROWS(wedge(e1, Multivector::monomial(5, {1})));

    std::mt19937_64 rng(5);
    for (std::size_t n : {10u, 40u, 128u})
        for (int t = 0; t < 10; ++t) {
            std::size_t ga = 1 + t % 3, gb = 1 + (t / 3) % 3;
            Multivector a = random_form(rng, n, ga, 6), b = random_form(rng, n, gb, 6), c = random_form(rng, n, 2, 4);
            CHECK(wedge(a, b) == wedge_oracle(a, b));
            CHECK(wedge(a, b) == wedge(b, a) * Rational((ga * gb) % 2 ? -1 : 1));
            CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        }
}

TEST_CASE("lexicographic export order") {
    Multivector f = Multivector::monomial(16, {2, 3}) + Multivector::monomial(16, {1, 9}) +
                    Multivector::monomial(16, {1, 2}, 5);
    auto lex = f.lex_terms();
    REQUIRE(lex.size() == 3);
    CHECK(lex[0].first == blade_mask({1, 2}));
    CHECK(lex[1].first == blade_mask({1, 9}));
    CHECK(lex[2].first == blade_mask({2, 3}));
}

TEST_CASE("kahler forms reproduce the printed tables") {
    const FormMatrix& psi = psi_matrix();
    for (const auto& p : printed_psi()) {
        CAPTURE(p.a);
        CAPTURE(p.b);
        CHECK(psi.at(p.a - 1, p.b - 1) == parse_printed(16, p));
    }
    QuaternionicForms q = quaternionic_forms();
    for (const auto& p : printed_theta()) {
        CAPTURE(p.a);
        CAPTURE(p.b);
        CHECK(q.theta.at(p.a - 1, p.b - 1) == parse_printed(8, p));
    }
    CHECK(kahler_form(Matrix(4, 4)).is_zero());
    CHECK_THROWS(kahler_form(Matrix::identity(4)));
}

TEST_CASE("psi_78 squared") {
    Multivector sq = wedge(psi_matrix().at(6, 7), psi_matrix().at(6, 7));
    CHECK(sq.size() == 28);
    CHECK(sq.coeff({1, 2, 3, 4}) == Rational(2));
}

TEST_CASE("charpoly of small matrices") {
    // 1x1 zero
    FormMatrix z(1, 4);
    auto t = charpoly_coeffs(z);
    REQUIRE(t.size() == 1);
    CHECK(t[0].is_zero());
    // 4x4 scalar skew matrix: tau4 = det = Pf^2, by both routes
    FormMatrix s(4, 6);
    const int v[6] = {2, -3, 5, 7, 1, -4}; // x12 x13 x14 x23 x24 x34
    int idx = 0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) s.set(a, b, Multivector::scalar(6, v[idx++]));
    const int pf = v[0] * v[5] - v[1] * v[4] + v[2] * v[3];
    auto ts = charpoly_coeffs(s);
    CHECK(ts[3] == Multivector::scalar(6, pf * pf));
    CHECK(tau4_direct(s) == ts[3]);
    CHECK(ts[0].is_zero());
    CHECK(ts[2].is_zero());
    // mixed grades are rejected
    FormMatrix bad(2, 4);
    bad.set(0, 1, Multivector::scalar(4, 1) + Multivector::monomial(4, {1, 2}));
    CHECK_THROWS(charpoly_coeffs(bad));
    CHECK_THROWS(tau4_direct(z));
}

TEST_CASE("quaternionic 4-form identity") {
    QuaternionicForms q = quaternionic_forms();
    auto t = charpoly_coeffs(q.theta);
    CHECK(t[0].is_zero());
    CHECK(t[2].is_zero());
    CHECK(t[1].coeff({1, 2, 3, 4}) == Rational(-12));
    CHECK(t[1] + q.omega_l * Rational(2) == Multivector(8));
    CHECK(tau4_direct(q.theta) == t[3]);
    CHECK(t[3].grade() == 8);
    CHECK_FALSE(t[3].is_zero());
}
