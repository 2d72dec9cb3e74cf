#include "octoforms/hopf.hpp"

#include <stdexcept>

#include "octoforms/clifford.hpp"

namespace octoforms {

namespace {

const CliffordSystem& spin9() {
    static const CliffordSystem c = standard_system(StandardKind::spin9);
    return c;
}

Rational dot16(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
    return s;
}

} // namespace

std::vector<Rational> SpherePoint16::coords() const {
    std::vector<Rational> c(x.coeffs().begin(), x.coeffs().end());
    c.insert(c.end(), y.coeffs().begin(), y.coeffs().end());
    return c;
}

SpherePoint16 SpherePoint16::from_coords(const std::vector<Rational>& c) {
    if (c.size() != 16) throw std::invalid_argument("SpherePoint16: expected 16 coordinates");
    SpherePoint16 p;
    p.x = CDElement(3, std::vector<Rational>(c.begin(), c.begin() + 8));
    p.y = CDElement(3, std::vector<Rational>(c.begin() + 8, c.end()));
    return p;
}

Rational SpherePoint16::norm2() const { return octoforms::norm2(x) + octoforms::norm2(y); }

Matrix hopf_action(const CDElement& u, const Rational& r) {
    if (u.level() != 3) throw std::invalid_argument("hopf_action: u must be an octonion");
    if (norm2(u) + r * r != Rational(1)) throw std::domain_error("hopf_action: |u|^2 + r^2 must be 1");
    return block2x2(Matrix::identity(8) * r, right_mult_matrix(conjugate(u)), right_mult_matrix(u),
                    Matrix::identity(8) * (-r));
}

std::array<std::vector<Rational>, 9> sections(const SpherePoint16& p) {
    const std::vector<Rational> n = p.coords();
    std::array<std::vector<Rational>, 9> out;
    for (std::size_t a = 0; a < 9; ++a) out[a] = mat_vec(spin9().mats[a], n);
    return out;
}

Lambda lambda_quadratic(const SpherePoint16& p) {
    Lambda l;
    l[0] = Rational(2) * dot(p.x, p.y);
    for (std::size_t a = 1; a < 8; ++a) l[a] = Rational(-2) * dot(p.x, p.y * CDElement::unit(3, a));
    l[8] = norm2(p.x) - norm2(p.y);
    return l;
}

Lambda lambda_coeffs(const SpherePoint16& p) {
    if (p.norm2() != Rational(1)) throw std::domain_error("lambda_coeffs: point is not on S^15");
    return lambda_quadratic(p);
}

Lambda hopf_map(const SpherePoint16& p) { return lambda_coeffs(p); }

bool fiber_orthogonality_check(const SpherePoint16& p, const std::vector<Rational>& tangent) {
    if (tangent.size() != 16) throw std::invalid_argument("fiber_orthogonality_check: tangent must have 16 entries");
    for (const auto& s : sections(p))
        if (!dot16(s, tangent).is_zero()) return false;
    return true;
}

std::vector<Rational> rational_sphere_point(const std::vector<Rational>& v) {
    Rational n2;
    for (const auto& c : v) n2.add_product(c, c);
    const Rational den = n2 + Rational(1);
    std::vector<Rational> out;
    out.reserve(v.size() + 1);
    for (const auto& c : v) out.push_back(Rational(2) * c / den);
    out.push_back((n2 - Rational(1)) / den);
    return out;
}

} // namespace octoforms
