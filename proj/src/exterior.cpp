#include "octoforms/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace octoforms {

namespace {

int popcount128(BladeMask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

int ctz128(BladeMask m) {
    auto lo = static_cast<std::uint64_t>(m);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

void require_dim(std::size_t n) {
    if (n > kMaxExteriorDim)
        throw std::invalid_argument("exterior algebra dimension " + std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxExteriorDim));
}

BladeMask bit(std::size_t index0) { return BladeMask{1} << index0; }

} // namespace

BladeMask blade_mask(std::span<const std::size_t> indices) {
    BladeMask m = 0;
    std::size_t prev = 0;
    for (std::size_t i : indices) {
        if (i == 0 || i > kMaxExteriorDim) throw std::out_of_range("blade index " + std::to_string(i) + " out of range");
        if (i <= prev) throw std::invalid_argument("blade indices must be strictly increasing");
        m |= bit(i - 1);
        prev = i;
    }
    return m;
}

std::vector<std::size_t> blade_indices(BladeMask mask) {
    std::vector<std::size_t> out;
    while (mask != 0) {
        int t = ctz128(mask);
        out.push_back(static_cast<std::size_t>(t) + 1);
        mask &= mask - 1;
    }
    return out;
}

int blade_grade(BladeMask mask) { return popcount128(mask); }

bool blade_lex_less(BladeMask a, BladeMask b) {
    if (a == b) return false;
    BladeMask diff = a ^ b;
    int d = ctz128(diff);
    BladeMask above = ~((BladeMask{2} << d) - 1);
    if (d == 127) above = 0;
    if ((a >> d) & 1) {
        // a has the smaller element here unless b stops before it.
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

int merge_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    while (b != 0) {
        int j = ctz128(b);
        b &= b - 1;
        if (j < 127) swaps += popcount128(a >> (j + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

// ------------------------------------------------------------ Multivector

Multivector::Multivector(std::size_t n) : n_(n) { require_dim(n); }

Multivector Multivector::monomial(std::size_t n, std::span<const std::size_t> indices, const Rational& c) {
    Multivector out(n);
    if (c.is_zero()) return out;
    std::vector<std::size_t> idx(indices.begin(), indices.end());
    for (std::size_t i : idx)
        if (i == 0 || i > n) throw std::out_of_range("monomial: index " + std::to_string(i) + " out of range");
    // bubble sort, counting transpositions
    int swaps = 0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                ++swaps;
            }
    for (std::size_t a = 1; a < idx.size(); ++a)
        if (idx[a] == idx[a - 1]) return out;
    out.terms_.emplace_back(blade_mask(idx), (swaps & 1) ? -c : c);
    return out;
}

Multivector Multivector::scalar(std::size_t n, const Rational& c) {
    Multivector out(n);
    if (!c.is_zero()) out.terms_.emplace_back(BladeMask{0}, c);
    return out;
}

Multivector Multivector::from_terms(std::size_t n, std::vector<Term> terms) {
    Multivector out(n);
    const BladeMask limit = n >= 128 ? ~BladeMask{0} : (BladeMask{1} << n) - 1;
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : terms) {
        if ((t.first & ~limit) != 0) throw std::out_of_range("Multivector: blade outside R^n");
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
            if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

int Multivector::grade() const {
    if (terms_.empty()) return -1;
    int g = blade_grade(terms_.front().first);
    for (const auto& t : terms_)
        if (blade_grade(t.first) != g) return -1;
    return g;
}

bool Multivector::is_homogeneous() const { return terms_.empty() || grade() >= 0; }

Rational Multivector::coeff(BladeMask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, BladeMask m) { return t.first < m; });
    return (it != terms_.end() && it->first == mask) ? it->second : Rational();
}

std::vector<Multivector::Term> Multivector::lex_terms() const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return blade_lex_less(x.first, y.first); });
    return out;
}

namespace {

std::vector<Multivector::Term> merge_terms(const std::vector<Multivector::Term>& x,
                                           const std::vector<Multivector::Term>& y, int ysign) {
    std::vector<Multivector::Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, ysign < 0 ? -y[j].second : y[j].second);
            ++j;
        } else {
            Rational v = ysign < 0 ? x[i].second - y[j].second : x[i].second + y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void require_same_n(const Multivector& a, const Multivector& b, const char* what) {
    if (a.n() != b.n())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.n()) + " vs " +
                                    std::to_string(b.n()) + ")");
}

} // namespace

Multivector& Multivector::operator+=(const Multivector& rhs) {
    require_same_n(*this, rhs, "Multivector +");
    terms_ = merge_terms(terms_, rhs.terms_, 1);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
    require_same_n(*this, rhs, "Multivector -");
    terms_ = merge_terms(terms_, rhs.terms_, -1);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
}

Multivector Multivector::operator-() const {
    Multivector out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

// ------------------------------------------------------- WedgeAccumulator

namespace {

struct MaskHash {
    std::size_t operator()(BladeMask m) const noexcept {
        std::uint64_t x = static_cast<std::uint64_t>(m) ^ (static_cast<std::uint64_t>(m >> 64) * 0x9E3779B97F4A7C15ULL);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

constexpr std::size_t kDenseLimit = 16;

} // namespace

struct WedgeAccumulator::Impl {
    std::size_t n;
    bool dense;
    std::vector<Rational> slots;
    std::vector<std::uint32_t> touched;
    std::vector<char> seen;
    std::unordered_map<BladeMask, Rational, MaskHash> map;

    Rational& at(BladeMask m) {
        if (!dense) return map[m];
        auto idx = static_cast<std::uint32_t>(m);
        if (!seen[idx]) {
            seen[idx] = 1;
            touched.push_back(idx);
        }
        return slots[idx];
    }
};

WedgeAccumulator::WedgeAccumulator(std::size_t n) : impl_(new Impl) {
    require_dim(n);
    impl_->n = n;
    impl_->dense = n <= kDenseLimit;
    if (impl_->dense) {
        impl_->slots.resize(std::size_t{1} << n);
        impl_->seen.assign(std::size_t{1} << n, 0);
    }
}

WedgeAccumulator::~WedgeAccumulator() { delete impl_; }

void WedgeAccumulator::add_wedge(const Multivector& a, const Multivector& b, const Rational& s) {
    if (a.n() != impl_->n || b.n() != impl_->n) throw std::invalid_argument("add_wedge: dimension mismatch");
    if (s.is_zero()) return;
    for (const auto& [ma, ca] : a.terms()) {
        Rational sa = ca * s;
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            Rational& slot = impl_->at(ma | mb);
            if (merge_sign(ma, mb) < 0)
                slot.add_product(-sa, cb);
            else
                slot.add_product(sa, cb);
        }
    }
}

void WedgeAccumulator::add(const Multivector& a, const Rational& s) {
    if (a.n() != impl_->n) throw std::invalid_argument("WedgeAccumulator::add: dimension mismatch");
    for (const auto& [m, c] : a.terms()) impl_->at(m).add_product(c, s);
}

Multivector WedgeAccumulator::take() {
    std::vector<Multivector::Term> terms;
    if (impl_->dense) {
        std::sort(impl_->touched.begin(), impl_->touched.end());
        for (std::uint32_t idx : impl_->touched) {
            Rational& v = impl_->slots[idx];
            if (!v.is_zero()) terms.emplace_back(BladeMask{idx}, v);
            v = Rational();
            impl_->seen[idx] = 0;
        }
        impl_->touched.clear();
    } else {
        terms.reserve(impl_->map.size());
        for (auto& [m, v] : impl_->map)
            if (!v.is_zero()) terms.emplace_back(m, v);
        impl_->map.clear();
    }
    return Multivector::from_terms(impl_->n, std::move(terms));
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    require_same_n(a, b, "wedge");
    WedgeAccumulator acc(a.n());
    acc.add_wedge(a, b);
    return acc.take();
}

Rational coefficient_gcd(const Multivector& f) {
    Rational g;
    for (const auto& [m, c] : f.terms()) g = gcd(g, c);
    return g;
}

Multivector kahler_form(const Matrix& j) {
    if (!j.is_square()) throw std::invalid_argument("kahler_form: matrix is not square");
    if (!is_skew(j)) throw std::invalid_argument("kahler_form: matrix is not skew");
    const std::size_t n = j.rows();
    std::vector<Multivector::Term> terms;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!j(a, b).is_zero()) terms.emplace_back(bit(a) | bit(b), j(a, b));
    return Multivector::from_terms(n, std::move(terms));
}

// ------------------------------------------------------------- FormMatrix

FormMatrix::FormMatrix(std::size_t k, std::size_t n) : k_(k), n_(n), entries_(k * k, Multivector(n)) {}

void FormMatrix::set(std::size_t a, std::size_t b, const Multivector& f) {
    if (a >= k_ || b >= k_) throw std::out_of_range("FormMatrix::set: index out of range");
    if (a == b) throw std::invalid_argument("FormMatrix::set: diagonal entries are zero");
    if (f.n() != n_) throw std::invalid_argument("FormMatrix::set: dimension mismatch");
    entries_[a * k_ + b] = f;
    entries_[b * k_ + a] = -f;
}

namespace {

void require_commuting(const FormMatrix& f) {
    int g = -2;
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b) {
            const Multivector& e = f.at(a, b);
            if (e.is_zero()) continue;
            int eg = e.grade();
            if (eg < 0 || eg % 2 != 0) throw std::invalid_argument("FormMatrix: entries must be homogeneous of even grade");
            if (g == -2) g = eg;
            if (eg != g) throw std::invalid_argument("FormMatrix: entries have different grades");
        }
}

} // namespace

std::vector<Multivector> charpoly_coeffs(const FormMatrix& f, std::size_t maxj) {
    require_commuting(f);
    const std::size_t k = f.size();
    const std::size_t n = f.n();
    if (maxj == 0 || maxj > k) maxj = k;
    std::vector<Multivector> taus;
    // M starts as the identity.
    std::vector<Multivector> m(k * k, Multivector(n));
    for (std::size_t a = 0; a < k; ++a) m[a * k + a] = Multivector::scalar(n, 1);
    WedgeAccumulator acc(n);
    for (std::size_t j = 1; j <= maxj; ++j) {
        const bool last = j == maxj;
        std::vector<Multivector> am(k * k, Multivector(n));
        Multivector tr(n);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t c = 0; c < k; ++c) {
                if (last && a != c) continue;
                for (std::size_t b = 0; b < k; ++b) {
                    const Multivector& x = f.at(a, b);
                    const Multivector& y = m[b * k + c];
                    if (!x.is_zero() && !y.is_zero()) acc.add_wedge(x, y);
                }
                am[a * k + c] = acc.take();
                if (a == c) tr += am[a * k + c];
            }
        Multivector cj = tr * Rational(-1, static_cast<long long>(j));
        taus.push_back(cj);
        if (!last) {
            for (std::size_t a = 0; a < k; ++a) am[a * k + a] += cj;
            m = std::move(am);
        }
    }
    return taus;
}

Multivector tau4_direct(const FormMatrix& f) {
    require_commuting(f);
    const std::size_t k = f.size();
    if (k < 4) throw std::invalid_argument("tau4_direct: matrix must be at least 4x4");
    WedgeAccumulator pf(f.n());
    WedgeAccumulator total(f.n());
    for (std::size_t a1 = 0; a1 < k; ++a1)
        for (std::size_t a2 = a1 + 1; a2 < k; ++a2)
            for (std::size_t a3 = a2 + 1; a3 < k; ++a3)
                for (std::size_t a4 = a3 + 1; a4 < k; ++a4) {
                    pf.add_wedge(f.at(a1, a2), f.at(a3, a4));
                    pf.add_wedge(f.at(a1, a3), f.at(a2, a4), -1);
                    pf.add_wedge(f.at(a1, a4), f.at(a2, a3));
                    Multivector p = pf.take();
                    total.add_wedge(p, p);
                }
    return total.take();
}

} // namespace octoforms
