#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace octoforms {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline; the
/// general case falls back to a shared, immutable GMP rational. Almost every
/// coefficient in this library is a small integer, so the inline path is the
/// hot one.
class Rational {
public:
    Rational() noexcept = default;
    Rational(int value) noexcept : num_(value) {}
    Rational(long value) noexcept : num_(value) {}
    Rational(long long value) noexcept : num_(value) {}
    Rational(unsigned value) noexcept : num_(value) {}
    Rational(unsigned long value) : Rational(static_cast<unsigned long long>(value)) {}
    Rational(unsigned long long value);
    Rational(long long numerator, long long denominator);
    explicit Rational(const mpq_class& value);
    explicit Rational(const mpz_class& value);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_integer() const noexcept;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] int sign() const noexcept;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] double to_double() const;

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// Adds a*b into *this without materializing the product separately.
    void add_product(const Rational& a, const Rational& b);

private:
    void assign_wide(__int128 numerator, __int128 denominator);
    void assign_big(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& value);

/// Greatest common divisor of two integer-valued rationals (non-negative).
Rational gcd(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace octoforms
