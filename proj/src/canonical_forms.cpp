#include "octoforms/canonical_forms.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace octoforms {

FormMatrix kahler_matrix(const CliffordSystem& c) {
    const std::size_t k = c.mats.size();
    FormMatrix f(k, c.n);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) f.set(a, b, kahler_form(c.mats[a] * c.mats[b]));
    return f;
}

const FormMatrix& psi_matrix() {
    static const FormMatrix psi = kahler_matrix(standard_system(StandardKind::spin9));
    return psi;
}

const std::vector<Multivector>& psi_charpoly() {
    static const std::vector<Multivector> taus = charpoly_coeffs(psi_matrix());
    return taus;
}

const Multivector& spin9_form() {
    static const Multivector phi = psi_charpoly()[3] * Rational(1, 360);
    return phi;
}

Multivector cgm_form() {
    const FormMatrix& psi = psi_matrix();
    const std::size_t k = psi.size();
    WedgeAccumulator acc(psi.n());
    WedgeAccumulator out(psi.n());
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t a2 = 0; a2 < k; ++a2) {
            for (std::size_t b = 0; b < k; ++b) acc.add_wedge(psi.at(a, b), psi.at(a2, b));
            Multivector bform = acc.take();
            out.add_wedge(bform, bform);
        }
    return out.take();
}

FpqValues fpq_values(const Matrix& upper) {
    if (!upper.is_square()) throw std::invalid_argument("fpq_values: matrix is not square");
    const std::size_t k = upper.rows();
    Matrix x(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            x(a, b) = upper(a, b);
            x(b, a) = -upper(a, b);
        }
    FpqValues v;
    Matrix xxt = x * transpose(x);
    v.f = frobenius(xxt, xxt);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) v.p.add_product(x(a, b), x(a, b));
    for (std::size_t a1 = 0; a1 < k; ++a1)
        for (std::size_t a2 = a1 + 1; a2 < k; ++a2)
            for (std::size_t a3 = a2 + 1; a3 < k; ++a3)
                for (std::size_t a4 = a3 + 1; a4 < k; ++a4) {
                    Rational pf = x(a1, a2) * x(a3, a4) - x(a1, a3) * x(a2, a4) + x(a1, a4) * x(a2, a3);
                    v.q.add_product(pf, pf);
                }
    return v;
}

FpqReport fpq_identity_check(std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("fpq_identity_check: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    FpqReport rep;
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix x(9, 9);
        for (std::size_t a = 0; a < 9; ++a)
            for (std::size_t b = a + 1; b < 9; ++b) x(a, b) = Rational(num(rng), den(rng));
        FpqValues v = fpq_values(x);
        if (v.f != Rational(2) * v.p * v.p - Rational(4) * v.q) ++rep.failures;
        rep.f = v.f;
        rep.p = v.p;
        rep.q = v.q;
        ++rep.trials;
    }
    return rep;
}

QuaternionicForms quaternionic_forms() {
    QuaternionicForms out;
    out.theta = kahler_matrix(standard_system(StandardKind::quaternionic_Sp2Sp1));
    WedgeAccumulator acc(8);
    for (std::size_t q = 1; q <= 3; ++q) {
        Multivector w = kahler_form(block_diagonal(left_mult_matrix(CDElement::unit(2, q)), 2));
        acc.add_wedge(w, w);
    }
    out.omega_l = acc.take();
    return out;
}

// ----------------------------------------------------------------- OctForm

OctForm OctForm::differential(std::size_t n, std::size_t offset) {
    if (offset + 8 > n) throw std::out_of_range("OctForm::differential: block exceeds dimension");
    OctForm f(n);
    for (std::size_t a = 0; a < 8; ++a) f.add(BladeMask{1} << (offset + a), CDElement::unit(3, a));
    return f;
}

int OctForm::grade() const {
    if (terms_.empty()) return -1;
    int g = blade_grade(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (blade_grade(m) != g) return -1;
    return g;
}

void OctForm::add(BladeMask blade, const CDElement& c) {
    auto [it, inserted] = terms_.try_emplace(blade, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OctForm OctForm::conj() const {
    OctForm out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, conjugate(c));
    return out;
}

Multivector OctForm::real_part() const {
    std::vector<Multivector::Term> terms;
    for (const auto& [m, c] : terms_) terms.emplace_back(m, c[0]);
    return Multivector::from_terms(n_, std::move(terms));
}

bool OctForm::is_real() const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 1; i < c.dim(); ++i)
            if (!c[i].is_zero()) return false;
    return true;
}

OctForm& OctForm::operator+=(const OctForm& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("OctForm +: dimension mismatch");
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

OctForm operator*(const Rational& s, OctForm a) {
    if (s.is_zero()) return OctForm(a.n_);
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
}

OctForm oct_wedge(const OctForm& a, const OctForm& b) {
    if (a.n() != b.n()) throw std::invalid_argument("oct_wedge: dimension mismatch");
    OctForm out(a.n());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            CDElement p = table_mul(ca, cb);
            if (merge_sign(ma, mb) < 0) p = -p;
            out.add(ma | mb, p);
        }
    return out;
}

KotrbatyForms kotrbaty_psi8() {
    const OctForm dx = OctForm::differential(16, 0);
    const OctForm dy = OctForm::differential(16, 8);
    const OctForm dxb = dx.conj();
    const OctForm dyb = dy.conj();
    KotrbatyForms k;
    k.psi40 = oct_wedge(oct_wedge(oct_wedge(dxb, dx), dxb), dx);
    k.psi31 = oct_wedge(oct_wedge(oct_wedge(dyb, dx), dxb), dx);
    k.psi13 = oct_wedge(oct_wedge(oct_wedge(dxb, dy), dyb), dy);
    k.psi04 = oct_wedge(oct_wedge(oct_wedge(dyb, dy), dyb), dy);
    k.psi8 = oct_wedge(k.psi40, k.psi40.conj());
    k.psi8 += Rational(4) * oct_wedge(k.psi31, k.psi31.conj());
    k.psi8 += Rational(-5) * (oct_wedge(k.psi31, k.psi13) + oct_wedge(k.psi13.conj(), k.psi31.conj()));
    k.psi8 += Rational(4) * oct_wedge(k.psi13, k.psi13.conj());
    k.psi8 += oct_wedge(k.psi04, k.psi04.conj());
    k.psi8_real = k.psi8.real_part();
    return k;
}

Tau8Report tau8_and_ratio() {
    const auto& taus = psi_charpoly();
    const BladeMask top = (BladeMask{1} << 16) - 1;
    Tau8Report rep;
    rep.tau8_top = taus[7].coeff(top);
    if (rep.tau8_top.is_zero()) throw std::logic_error("tau8_and_ratio: tau_8(psi) vanishes");
    rep.tau4_sq_top = wedge(taus[3], taus[3]).coeff(top);
    rep.ratio = rep.tau4_sq_top / rep.tau8_top;
    return rep;
}

// ------------------------------------------------------------ Berger MC

namespace {

constexpr std::size_t kSlots = 12870;
constexpr std::size_t kBlockSize = 8192;

struct SlotTables {
    std::vector<BladeMask> blades;
    // slot index for (X, Y) = (low byte, high byte) of the blade, -1 otherwise
    std::vector<int> slot_of;
    std::vector<std::vector<unsigned>> by_popcount;
    // Laplace expansion of a row set along one column: det M[R, Y] =
    // sum_t sign_t M[row_t, c] det M[R - row_t, Y - c]
    struct Expansion {
        int count = 0;
        std::uint8_t row[8];
        std::uint8_t sub[8];
        double sign[8];
    };
    std::vector<Expansion> expand;
    // slot <- sign * a^kx * minors[minor]
    struct OutTerm {
        int slot;
        int minor;
        int kx;
        double sign;
    };
    std::vector<OutTerm> plan;
};

const SlotTables& slot_tables() {
    static const SlotTables t = [] {
        SlotTables s;
        std::vector<BladeMask> all;
        for (unsigned m = 0; m < (1u << 16); ++m)
            if (std::popcount(m) == 8) all.push_back(BladeMask{m});
        std::sort(all.begin(), all.end(), blade_lex_less);
        s.blades = all;
        s.slot_of.assign(1u << 16, -1);
        for (std::size_t i = 0; i < all.size(); ++i) s.slot_of[static_cast<unsigned>(all[i])] = static_cast<int>(i);
        s.by_popcount.resize(9);
        for (unsigned m = 0; m < 256; ++m) s.by_popcount[std::popcount(m)].push_back(m);
        s.expand.resize(256);
        for (unsigned rows = 0; rows < 256; ++rows) {
            auto& e = s.expand[rows];
            for (unsigned rr = rows; rr != 0; rr &= rr - 1) {
                const int row = std::countr_zero(rr);
                e.row[e.count] = static_cast<std::uint8_t>(row);
                e.sub[e.count] = static_cast<std::uint8_t>(rows & ~(1u << row));
                e.sign[e.count] = (e.count & 1) ? -1.0 : 1.0;
                ++e.count;
            }
        }
        // blade X u (Y + 8): the a-columns of X come first, so the cofactor
        // sign is (-1)^{sum_t (x_t - t)} and the minor uses the rows outside X
        for (unsigned x = 0; x < 256; ++x) {
            const int kx = std::popcount(x);
            int parity = 0, idx = 0;
            for (unsigned xx = x; xx != 0; xx &= xx - 1, ++idx) parity += std::countr_zero(xx) - idx;
            const unsigned rows = ~x & 0xFFu;
            for (unsigned y : s.by_popcount[8 - kx])
                s.plan.push_back({s.slot_of[x | (y << 8)], static_cast<int>(y * 256 + rows), kx,
                                  (parity & 1) ? -1.0 : 1.0});
        }
        return s;
    }();
    return t;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void sample_point(std::uint64_t seed, std::uint64_t index, double u[8], double& r) {
    std::mt19937_64 eng(splitmix64(seed ^ splitmix64(index)));
    std::normal_distribution<double> normal;
    double g[9];
    double norm2 = 0;
    do {
        norm2 = 0;
        for (double& x : g) {
            x = normal(eng);
            norm2 += x * x;
        }
    } while (norm2 == 0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int a = 0; a < 8; ++a) u[a] = g[a] * inv;
    r = g[8] * inv;
}

void line_volume_into(const double u[8], double r, double* out, std::vector<double>& minors) {
    const SlotTables& t = slot_tables();
    if (1.0 + r < 1e-12) {
        // l_infinity: basis (0, e_i), only the blade 9..16 survives
        std::fill(out, out + kSlots, 0.0);
        out[t.slot_of[0xFF00]] = 1.0;
        return;
    }
    const double s = std::sqrt(2.0 * (1.0 + r));
    const double a = (1.0 + r) / s;
    // mt[j][i] = M(i, j) = <e_j, e_i u> / s
    double mt[8][8] = {};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k) {
            UnitProduct p = unit_product(3, i, k);
            mt[p.index][i] += p.sign * u[k] / s;
        }
    // minors[Y * 256 + R] = det M[R, Y] for |R| = |Y|, by expansion along the
    // lowest column of Y
    minors[0] = 1.0;
    for (int k = 1; k <= 8; ++k)
        for (unsigned y : t.by_popcount[k]) {
            const double* col = mt[std::countr_zero(y)];
            const double* sub = &minors[(y & (y - 1)) * 256];
            double* dst = &minors[y * 256];
            for (unsigned rows : t.by_popcount[k]) {
                const auto& e = t.expand[rows];
                double det = 0;
                for (int j = 0; j < e.count; ++j) det += e.sign[j] * col[e.row[j]] * sub[e.sub[j]];
                dst[rows] = det;
            }
        }
    double apow[9];
    apow[0] = 1;
    for (int k = 1; k <= 8; ++k) apow[k] = apow[k - 1] * a;
    for (const auto& p : t.plan) out[p.slot] = p.sign * apow[p.kx] * minors[p.minor];
}

} // namespace

const std::vector<BladeMask>& grade8_blades() { return slot_tables().blades; }

std::vector<double> line_volume_form(const double u[8], double r) {
    std::vector<double> out(kSlots);
    std::vector<double> minors(256 * 256);
    line_volume_into(u, r, out.data(), minors);
    return out;
}

BergerResult berger_mc(std::size_t samples, std::uint64_t seed, std::size_t workers) {
    if (samples == 0) throw std::invalid_argument("berger_mc: samples must be >= 1");
    if (workers == 0) workers = 1;
    const std::size_t blocks = (samples + kBlockSize - 1) / kBlockSize;
    workers = std::min(workers, blocks);
    std::vector<std::vector<double>> block_sum(blocks), block_sq(blocks);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        std::vector<double> minors(256 * 256);
        std::vector<double> form(kSlots);
        double u[8], r;
        for (std::size_t b = next++; b < blocks; b = next++) {
            std::vector<double> sum(kSlots, 0.0), sq(kSlots, 0.0);
            const std::size_t lo = b * kBlockSize, hi = std::min(samples, lo + kBlockSize);
            for (std::size_t i = lo; i < hi; ++i) {
                sample_point(seed, i, u, r);
                line_volume_into(u, r, form.data(), minors);
                for (std::size_t s = 0; s < kSlots; ++s) {
                    sum[s] += form[s];
                    sq[s] += form[s] * form[s];
                }
            }
            block_sum[b] = std::move(sum);
            block_sq[b] = std::move(sq);
        }
    };
    slot_tables();
    unit_product(3, 0, 0);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // reduce in block order so the result does not depend on the worker count
    const std::size_t half_blocks = std::max<std::size_t>(1, blocks / 2);
    const std::size_t half_samples = std::min(samples, half_blocks * kBlockSize);
    std::vector<double> sum(kSlots, 0.0), sq(kSlots, 0.0), half(kSlots, 0.0);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t s = 0; s < kSlots; ++s) {
            sum[s] += block_sum[b][s];
            sq[s] += block_sq[b][s];
        }
        if (b + 1 == half_blocks) half = sum;
    }

    BergerResult res;
    res.samples = samples;
    res.seed = seed;
    res.mean.resize(kSlots);
    res.stderr_.resize(kSlots);
    const double n = static_cast<double>(samples);
    for (std::size_t s = 0; s < kSlots; ++s) {
        res.mean[s] = sum[s] / n;
        const double var = samples > 1 ? std::max(0.0, (sq[s] - n * res.mean[s] * res.mean[s]) / (n - 1)) : 0.0;
        res.stderr_[s] = std::sqrt(var / n);
        half[s] /= static_cast<double>(half_samples);
    }

    const Multivector& phi = spin9_form();
    const auto& blades = grade8_blades();
    std::vector<double> phiv(kSlots);
    for (std::size_t s = 0; s < kSlots; ++s) phiv[s] = phi.coeff(blades[s]).to_double();
    double ep = 0, pp = 0, ee = 0;
    for (std::size_t s = 0; s < kSlots; ++s) {
        ep += res.mean[s] * phiv[s];
        pp += phiv[s] * phiv[s];
        ee += res.mean[s] * res.mean[s];
    }
    res.scale = ep / pp;
    res.cosine = ee > 0 ? ep / std::sqrt(ee * pp) : 0.0;
    double rf = 0, rh = 0;
    for (std::size_t s = 0; s < kSlots; ++s) {
        const double fit = res.scale * phiv[s];
        rf += (res.mean[s] - fit) * (res.mean[s] - fit);
        rh += (half[s] - fit) * (half[s] - fit);
        if (phiv[s] == 0 && res.stderr_[s] > 0) {
            const double z = res.mean[s] / res.stderr_[s];
            ++res.zero_slots;
            res.zero_chi2 += z * z;
            if (std::abs(z) > 3) ++res.zero_beyond_3sigma;
            res.zero_max_z = std::max(res.zero_max_z, std::abs(z));
        }
    }
    if (res.zero_slots > 0) {
        const double tail = 0.0026997960632601866 / static_cast<double>(res.zero_slots);
        double lo = 0, hi = 40;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (std::erfc(mid / std::sqrt(2.0)) > tail ? lo : hi) = mid;
        }
        res.zero_z_threshold = 0.5 * (lo + hi);
    }
    res.rms_full = std::sqrt(rf / kSlots);
    res.rms_half = std::sqrt(rh / kSlots);
    res.half_samples = half_samples;
    return res;
}

// ------------------------------------------------------------ Pontrjagin

namespace {

std::string entry_text(const PontrjaginEntry& e) {
    if (e.coeff.is_zero()) return e.name + " = 0";
    std::ostringstream os;
    os << e.name << " = (" << e.coeff.str() << ") pi^" << e.pi_power << " [" << e.form << "]";
    return os.str();
}

} // namespace

PontrjaginReport pontrjagin_report() {
    const auto& taus = psi_charpoly();
    if (!taus[1].is_zero() || !taus[5].is_zero())
        throw std::logic_error("pontrjagin_report: tau_2 or tau_6 of psi is nonzero");
    if (taus[3] != spin9_form() * Rational(360))
        throw std::logic_error("pontrjagin_report: tau_4(psi) != 360 Phi");

    PontrjaginReport rep;
    // 16 pi^4 p2(E) = tau_4 = 360 Phi, 256 pi^8 p4(E) = tau_8
    const PontrjaginEntry p2e{"p2(E)", Rational(360, 16), -4, "Phi"};
    const PontrjaginEntry p4e{"p4(E)", Rational(1, 256), -8, "tau8"};
    rep.bundle = {{"p1(E)", 0, 0, ""}, p2e, {"p3(E)", 0, 0, ""}, p4e};
    // p1(E) = p3(E) = 0, so every product term of the relations vanishes and
    // p2(M) = -p2(E), p4(M) = -1664/128 p4(E).
    rep.manifold = {{"p1(M)", 0, 0, ""},
                    {"p2(M)", -p2e.coeff, p2e.pi_power, p2e.form},
                    {"p3(M)", 0, 0, ""},
                    {"p4(M)", Rational(-1664, 128) * p4e.coeff, p4e.pi_power, p4e.form}};
    // p2 = 6u and p4 = 39u^2 on the Cayley plane
    rep.generator = {{"u", rep.manifold[1].coeff / Rational(6), -4, "Phi"},
                     {"u", rep.manifold[1].coeff / Rational(6) / Rational(360), -4, "tau4"},
                     {"u^2", rep.manifold[3].coeff / Rational(39), -8, "tau8"}};

    std::ostringstream os;
    os << "bundle E^9:\n";
    for (const auto& e : rep.bundle) os << "  " << entry_text(e) << "\n";
    os << "relations: p1(M) = 2 p1(E); p2(M) = 7/4 p1(E)^2 - p2(E);\n"
       << "  p3(M) = 1/8 (7 p1(E)^3 - 12 p1(E) p2(E) + 16 p3(E));\n"
       << "  p4(M) = 1/128 (35 p1(E)^4 - 120 p1(E)^2 p2(E) + 400 p1(E) p3(E) - 1664 p4(E))\n";
    os << "manifold M^16:\n";
    for (const auto& e : rep.manifold) os << "  " << entry_text(e) << "\n";
    os << "generator of H^8:\n";
    for (const auto& e : rep.generator) os << "  " << entry_text(e) << "\n";
    rep.text = os.str();
    return rep;
}

} // namespace octoforms
