#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "octoforms/matrix.hpp"
#include "octoforms/rational.hpp"

namespace octoforms {

/// Element of the level-k Cayley–Dickson algebra, dimension 2^k.
///
/// Coefficients are in the basis (1, e_1, ..., e_{2^k - 1}); index bit k-1
/// selects the second half of the doubling (a + b e). At level 3 the basis
/// reads (1, i, j, k, e, f, g, h) with f = ie, g = je, h = ke.
class CDElement {
public:
    static constexpr unsigned kMaxLevel = 8;

    CDElement() : CDElement(0) {}
    explicit CDElement(unsigned level);
    CDElement(unsigned level, std::vector<Rational> coeffs);

    /// c * e_index
    static CDElement unit(unsigned level, std::size_t index, const Rational& c = 1);
    static CDElement real(unsigned level, const Rational& r);

    [[nodiscard]] unsigned level() const noexcept { return level_; }
    [[nodiscard]] std::size_t dim() const noexcept { return coeffs_.size(); }
    [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_pure_imaginary() const { return coeffs_[0].is_zero(); }

    CDElement& operator+=(const CDElement& rhs);
    CDElement& operator-=(const CDElement& rhs);
    CDElement& operator*=(const Rational& s);
    CDElement operator-() const;

    friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
    friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
    friend CDElement operator*(CDElement a, const Rational& s) { return a *= s; }
    friend CDElement operator*(const Rational& s, CDElement a) { return a *= s; }
    friend bool operator==(const CDElement& a, const CDElement& b) = default;

private:
    unsigned level_ = 0;
    std::vector<Rational> coeffs_;
};

/// Product by the recursive doubling formula
/// (a + b e)(c + d e) = (ac - conj(d) b) + (b conj(c) + d a) e.
CDElement cd_mul(const CDElement& x, const CDElement& y);
inline CDElement operator*(const CDElement& x, const CDElement& y) { return cd_mul(x, y); }

CDElement conjugate(const CDElement& x);
Rational norm2(const CDElement& x);
inline Rational real_part(const CDElement& x) { return x[0]; }
/// (xy)z - x(yz)
CDElement associator(const CDElement& x, const CDElement& y, const CDElement& z);
/// Euclidean inner product of coefficient vectors.
Rational dot(const CDElement& x, const CDElement& y);

/// e_a e_b = sign * e_index; cached per level.
struct UnitProduct {
    int sign;
    std::size_t index;
};
UnitProduct unit_product(unsigned level, std::size_t a, std::size_t b);

/// Same product as cd_mul, evaluated through the cached unit table.
CDElement table_mul(const CDElement& x, const CDElement& y);

/// Column c holds the coordinates of e_c * u, so M vec(x) = vec(x u).
Matrix right_mult_matrix(const CDElement& u);
/// M vec(x) = vec(u x).
Matrix left_mult_matrix(const CDElement& u);

} // namespace octoforms
