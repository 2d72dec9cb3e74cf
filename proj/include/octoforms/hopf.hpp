#pragma once

#include <array>
#include <vector>

#include "octoforms/cayley_dickson.hpp"
#include "octoforms/matrix.hpp"

namespace octoforms {

/// N = (x, y) in R^16 = O + O.
struct SpherePoint16 {
    CDElement x{3};
    CDElement y{3};

    /// Coordinates (x_1..x_8, y_1..y_8).
    [[nodiscard]] std::vector<Rational> coords() const;
    static SpherePoint16 from_coords(const std::vector<Rational>& c);
    [[nodiscard]] Rational norm2() const;
};

using Lambda = std::array<Rational, 9>;

/// The symmetric involution [[r, R_conj(u)], [R_u, -r]] for |u|^2 + r^2 = 1.
Matrix hopf_action(const CDElement& u, const Rational& r);

/// I_a N for a = 1..9 as 16-vectors.
std::array<std::vector<Rational>, 9> sections(const SpherePoint16& p);

/// The quadratic formulas 2 x.y, -2 x.(y e_a), |x|^2 - |y|^2 without any
/// sphere check (homogeneous of degree 2).
Lambda lambda_quadratic(const SpherePoint16& p);

/// lambda_quadratic on the unit sphere; throws std::domain_error otherwise.
Lambda lambda_coeffs(const SpherePoint16& p);

/// The Hopf projection S^15 -> S^8, defined as the lambda vector. The line
/// l_inf = {(0, y)} maps to (0, ..., 0, -1).
Lambda hopf_map(const SpherePoint16& p);

/// True when tangent is orthogonal to all nine I_a N.
bool fiber_orthogonality_check(const SpherePoint16& p, const std::vector<Rational>& tangent);

/// Rational point of S^{n-1} by inverse stereographic projection of v in Q^{n-1}.
std::vector<Rational> rational_sphere_point(const std::vector<Rational>& v);

} // namespace octoforms
