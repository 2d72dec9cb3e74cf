#include "octoforms/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace octoforms {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMin = std::numeric_limits<std::int64_t>::min() + 1;
constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 magnitude(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    u128 mag = magnitude(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
    mpz_class out = (hi << 64) + lo;
    return v < 0 ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z.get_si() >= kSmallMin;
}

bool fits_small(i128 v) { return v >= kSmallMin && v <= kSmallMax; }

} // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    assign_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const mpz_class& value) { assign_big(mpq_class(value)); }

Rational::Rational(unsigned long long value) {
    if (value <= static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max())) {
        num_ = static_cast<std::int64_t>(value);
    } else {
        assign_big(mpq_class(mpz_class(std::to_string(value))));
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

void Rational::assign_wide(i128 numerator, i128 denominator) {
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    if (denominator != 1) {
        u128 g = gcd_u128(magnitude(numerator), u128(denominator));
        if (g > 1) {
            numerator /= i128(g);
            denominator /= i128(g);
        }
    }
    if (fits_small(numerator) && fits_small(denominator)) {
        num_ = static_cast<std::int64_t>(numerator);
        den_ = static_cast<std::int64_t>(denominator);
        big_.reset();
        return;
    }
    assign_big(mpq_class(to_mpz(numerator), to_mpz(denominator)));
}

void Rational::assign_big(mpq_class value) {
    value.canonicalize();
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        num_ = value.get_num().get_si();
        den_ = value.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(value));
}

bool Rational::is_integer() const noexcept {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(num_, rhs.num_, &r) && r >= kSmallMin) {
                num_ = r;
                return *this;
            }
            assign_wide(i128(num_) + rhs.num_, 1);
            return *this;
        }
        assign_wide(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(num_, rhs.num_, &r) && r >= kSmallMin) {
                num_ = r;
                return *this;
            }
            assign_wide(i128(num_) * rhs.num_, 1);
            return *this;
        }
        assign_wide(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !rhs.big_) {
        assign_wide(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
        return *this;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &r) &&
            r >= kSmallMin) {
            num_ = r;
            return;
        }
    }
    *this += a * b;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    // Canonical storage: a big value never equals a small one.
    if (!lhs.big_ || !rhs.big_) return false;
    return *lhs.big_ == *rhs.big_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
        i128 l = i128(lhs.num_) * rhs.den_;
        i128 r = i128(rhs.num_) * lhs.den_;
        return l <=> r;
    }
    int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c <=> 0;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational gcd(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer()) throw std::domain_error("gcd: non-integer argument");
    mpz_class g;
    mpz_class an = a.numerator();
    mpz_class bn = b.numerator();
    mpz_gcd(g.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    return Rational(g);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

} // namespace octoforms
