#include "octoforms/cayley_dickson.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

namespace octoforms {

CDElement::CDElement(unsigned level) : level_(level) {
    if (level > kMaxLevel) throw std::invalid_argument("CDElement: level " + std::to_string(level) + " too large");
    coeffs_.resize(std::size_t{1} << level);
}

CDElement::CDElement(unsigned level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    if (level > kMaxLevel) throw std::invalid_argument("CDElement: level " + std::to_string(level) + " too large");
    if (coeffs_.size() != (std::size_t{1} << level))
        throw std::invalid_argument("CDElement: expected " + std::to_string(std::size_t{1} << level) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

CDElement CDElement::unit(unsigned level, std::size_t index, const Rational& c) {
    CDElement x(level);
    if (index >= x.dim()) throw std::out_of_range("CDElement::unit: index out of range");
    x.coeffs_[index] = c;
    return x;
}

CDElement CDElement::real(unsigned level, const Rational& r) { return unit(level, 0, r); }

bool CDElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

static void require_same_level(const CDElement& a, const CDElement& b, const char* what) {
    if (a.level() != b.level())
        throw std::invalid_argument(std::string(what) + ": level mismatch (" + std::to_string(a.level()) + " vs " +
                                    std::to_string(b.level()) + ")");
}

CDElement& CDElement::operator+=(const CDElement& rhs) {
    require_same_level(*this, rhs, "CDElement +");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CDElement& CDElement::operator-=(const CDElement& rhs) {
    require_same_level(*this, rhs, "CDElement -");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CDElement& CDElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CDElement CDElement::operator-() const {
    CDElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

using Vec = std::vector<Rational>;

Vec conj_vec(std::span<const Rational> x) {
    Vec out(x.begin(), x.end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return out;
}

Vec mul_vec(std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    auto a = x.first(h), b = x.subspan(h);
    auto c = y.first(h), d = y.subspan(h);
    Vec cc = conj_vec(c);
    Vec dc = conj_vec(d);
    Vec ac = mul_vec(a, c);
    Vec db = mul_vec(dc, b);
    Vec bc = mul_vec(b, cc);
    Vec da = mul_vec(d, a);
    Vec out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ac[i] - db[i];
        out[h + i] = bc[i] + da[i];
    }
    return out;
}

} // namespace

CDElement cd_mul(const CDElement& x, const CDElement& y) {
    require_same_level(x, y, "cd_mul");
    return CDElement(x.level(), mul_vec(x.coeffs(), y.coeffs()));
}

CDElement conjugate(const CDElement& x) { return CDElement(x.level(), conj_vec(x.coeffs())); }

Rational norm2(const CDElement& x) { return dot(x, x); }

Rational dot(const CDElement& x, const CDElement& y) {
    require_same_level(x, y, "dot");
    Rational s;
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s.add_product(x[i], y[i]);
    return s;
}

CDElement associator(const CDElement& x, const CDElement& y, const CDElement& z) {
    return cd_mul(cd_mul(x, y), z) - cd_mul(x, cd_mul(y, z));
}

namespace {

struct UnitTable {
    std::size_t dim;
    std::vector<UnitProduct> entries;
};

UnitTable build_table(unsigned level) {
    UnitTable t;
    t.dim = std::size_t{1} << level;
    t.entries.resize(t.dim * t.dim);
    for (std::size_t a = 0; a < t.dim; ++a) {
        CDElement ea = CDElement::unit(level, a);
        for (std::size_t b = 0; b < t.dim; ++b) {
            CDElement p = cd_mul(ea, CDElement::unit(level, b));
            UnitProduct up{0, 0};
            for (std::size_t c = 0; c < t.dim; ++c) {
                if (p[c].is_zero()) continue;
                up = {p[c].sign(), c};
            }
            t.entries[a * t.dim + b] = up;
        }
    }
    return t;
}

const UnitTable& table_for(unsigned level) {
    static std::array<UnitTable, CDElement::kMaxLevel + 1> tables;
    static std::array<std::once_flag, CDElement::kMaxLevel + 1> flags;
    if (level > CDElement::kMaxLevel) throw std::invalid_argument("unit_product: level too large");
    std::call_once(flags[level], [level] { tables[level] = build_table(level); });
    return tables[level];
}

} // namespace

UnitProduct unit_product(unsigned level, std::size_t a, std::size_t b) {
    const UnitTable& t = table_for(level);
    if (a >= t.dim || b >= t.dim) throw std::out_of_range("unit_product: index out of range");
    return t.entries[a * t.dim + b];
}

CDElement table_mul(const CDElement& x, const CDElement& y) {
    require_same_level(x, y, "table_mul");
    const UnitTable& t = table_for(x.level());
    CDElement out(x.level());
    for (std::size_t a = 0; a < t.dim; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < t.dim; ++b) {
            if (y[b].is_zero()) continue;
            const UnitProduct& up = t.entries[a * t.dim + b];
            Rational p = x[a] * y[b];
            if (up.sign < 0)
                out[up.index] -= p;
            else
                out[up.index] += p;
        }
    }
    return out;
}

Matrix right_mult_matrix(const CDElement& u) {
    const std::size_t n = u.dim();
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        CDElement col = cd_mul(CDElement::unit(u.level(), c), u);
        for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return m;
}

Matrix left_mult_matrix(const CDElement& u) {
    const std::size_t n = u.dim();
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        CDElement col = cd_mul(u, CDElement::unit(u.level(), c));
        for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return m;
}

} // namespace octoforms
