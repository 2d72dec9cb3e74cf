#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "octoforms/matrix.hpp"
#include "octoforms/rational.hpp"

namespace octoforms {

/// Basis monomial e^{i1...ik} as a bitmask; bit (i-1) stands for index i.
using BladeMask = unsigned __int128;

constexpr std::size_t kMaxExteriorDim = 128;

/// Mask from strictly increasing 1-based indices.
BladeMask blade_mask(std::span<const std::size_t> indices);
inline BladeMask blade_mask(std::initializer_list<std::size_t> indices) {
    return blade_mask(std::span<const std::size_t>(indices.begin(), indices.size()));
}
/// 1-based indices of a mask, increasing.
std::vector<std::size_t> blade_indices(BladeMask mask);
int blade_grade(BladeMask mask);
/// Lexicographic order on the sorted index lists.
bool blade_lex_less(BladeMask a, BladeMask b);
/// Sign of e^a ^ e^b for disjoint a, b (parity of pairs i in a, j in b, i > j).
int merge_sign(BladeMask a, BladeMask b);

/// Sparse exterior form over R^n with exact coefficients.
class Multivector {
public:
    using Term = std::pair<BladeMask, Rational>;

    Multivector() = default;
    explicit Multivector(std::size_t n);

    /// c * e^{i1} ^ ... ^ e^{ik}; indices in any order, repeated index gives 0.
    static Multivector monomial(std::size_t n, std::span<const std::size_t> indices, const Rational& c = 1);
    static Multivector monomial(std::size_t n, std::initializer_list<std::size_t> indices, const Rational& c = 1) {
        return monomial(n, std::span<const std::size_t>(indices.begin(), indices.size()), c);
    }
    static Multivector scalar(std::size_t n, const Rational& c);
    /// Takes (mask, coeff) pairs in any order; sums duplicates, drops zeros.
    static Multivector from_terms(std::size_t n, std::vector<Term> terms);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    /// Terms sorted by mask value, no zero coefficients.
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Common grade of all terms, or -1 if empty or mixed.
    [[nodiscard]] int grade() const;
    [[nodiscard]] bool is_homogeneous() const;
    [[nodiscard]] Rational coeff(BladeMask mask) const;
    [[nodiscard]] Rational coeff(std::initializer_list<std::size_t> indices) const { return coeff(blade_mask(indices)); }
    /// Terms in lexicographic blade order (the export order).
    [[nodiscard]] std::vector<Term> lex_terms() const;

    Multivector& operator+=(const Multivector& rhs);
    Multivector& operator-=(const Multivector& rhs);
    Multivector& operator*=(const Rational& s);
    Multivector operator-() const;

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
    friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
    friend bool operator==(const Multivector& a, const Multivector& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

/// Accumulates sums of wedge products. Dense over all 2^n masks for small n,
/// hashed otherwise.
class WedgeAccumulator {
public:
    explicit WedgeAccumulator(std::size_t n);
    ~WedgeAccumulator();
    WedgeAccumulator(const WedgeAccumulator&) = delete;
    WedgeAccumulator& operator=(const WedgeAccumulator&) = delete;

    /// += s * (a ^ b)
    void add_wedge(const Multivector& a, const Multivector& b, const Rational& s = 1);
    void add(const Multivector& a, const Rational& s = 1);
    /// Returns the accumulated form and resets to zero.
    Multivector take();

private:
    struct Impl;
    Impl* impl_;
};

Multivector wedge(const Multivector& a, const Multivector& b);
/// Integer content: gcd of all coefficients, which must be integers.
Rational coefficient_gcd(const Multivector& f);

/// psi = sum_{i<j} <e_i, J e_j> e^{ij}, i.e. coefficient J(i, j).
Multivector kahler_form(const Matrix& j);

/// Skew k x k matrix of commuting forms (all entries homogeneous of one even grade).
class FormMatrix {
public:
    FormMatrix() = default;
    FormMatrix(std::size_t k, std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return k_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const Multivector& at(std::size_t a, std::size_t b) const { return entries_[a * k_ + b]; }
    /// Sets (a, b) to f and (b, a) to -f; a != b.
    void set(std::size_t a, std::size_t b, const Multivector& f);

private:
    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::vector<Multivector> entries_;
};

/// Coefficients tau_1..tau_maxj of det(tI - f) = sum_j tau_j t^{k-j}
/// (tau_0 = 1), by Faddeev–LeVerrier over the even subalgebra. maxj = 0
/// means all k.
std::vector<Multivector> charpoly_coeffs(const FormMatrix& f, std::size_t maxj = 0);

/// Sum over a1<a2<a3<a4 of the squared sub-Pfaffians.
Multivector tau4_direct(const FormMatrix& f);

} // namespace octoforms
