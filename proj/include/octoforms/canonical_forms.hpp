#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "octoforms/cayley_dickson.hpp"
#include "octoforms/clifford.hpp"
#include "octoforms/exterior.hpp"

namespace octoforms {

/// Kähler forms psi_ab of J_ab = P_a P_b for a Clifford system, as a skew
/// (m+1) x (m+1) form matrix over R^n.
FormMatrix kahler_matrix(const CliffordSystem& c);

/// The 9 x 9 matrix psi of the spin9 system on R^16.
const FormMatrix& psi_matrix();

/// tau_1..tau_9 of psi, computed once.
const std::vector<Multivector>& psi_charpoly();

/// tau_4(psi) / 360; integer coefficients with gcd 1.
const Multivector& spin9_form();

/// sum over a, b, a', b' of psi_ab ^ psi_ab' ^ psi_a'b ^ psi_a'b'.
Multivector cgm_form();

struct FpqReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// F, P, Q of the last trial, for display.
    Rational f, p, q;

    [[nodiscard]] bool ok() const { return failures == 0; }
};

/// F, P and Q of a skew 9 x 9 scalar matrix (only the upper triangle is read).
struct FpqValues {
    Rational f, p, q;
};
FpqValues fpq_values(const Matrix& x);

/// Checks F = 2P^2 - 4Q on random rational skew 9 x 9 matrices.
FpqReport fpq_identity_check(std::size_t trials, std::uint64_t seed);

struct QuaternionicForms {
    FormMatrix theta; // 5 x 5 over R^8
    Multivector omega_l;
};
QuaternionicForms quaternionic_forms();

/// Exterior form with octonion coefficients; products of coefficients keep
/// the order of the wedge factors (left coefficient times right coefficient).
class OctForm {
public:
    OctForm() = default;
    explicit OctForm(std::size_t n) : n_(n) {}

    /// sum_a e_a dx_{offset + a + 1} (the octonionic differential of the
    /// coordinate block starting at 1-based index offset + 1).
    static OctForm differential(std::size_t n, std::size_t offset);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const std::map<BladeMask, CDElement>& terms() const noexcept { return terms_; }
    [[nodiscard]] int grade() const;

    void add(BladeMask blade, const CDElement& c);

    /// Coefficientwise conjugation; satisfies conj(a ^ b) = (-1)^{kl} conj(b) ^ conj(a).
    [[nodiscard]] OctForm conj() const;
    /// Real parts of the coefficients.
    [[nodiscard]] Multivector real_part() const;
    /// True when every coefficient is real.
    [[nodiscard]] bool is_real() const;

    OctForm& operator+=(const OctForm& rhs);
    friend OctForm operator+(OctForm a, const OctForm& b) { return a += b; }
    friend OctForm operator*(const Rational& s, OctForm a);
    friend bool operator==(const OctForm& a, const OctForm& b) = default;

private:
    std::size_t n_ = 0;
    std::map<BladeMask, CDElement> terms_;
};

OctForm oct_wedge(const OctForm& a, const OctForm& b);

struct KotrbatyForms {
    OctForm psi40, psi31, psi13, psi04;
    OctForm psi8;
    Multivector psi8_real;
};
KotrbatyForms kotrbaty_psi8();

struct Tau8Report {
    Rational tau8_top;  // tau_8(psi) = tau8_top * e^{1..16}
    Rational tau4_sq_top;
    Rational ratio;     // (tau_4 ^ tau_4) / tau_8
};
Tau8Report tau8_and_ratio();

/// Monte-Carlo estimate of the average over S^8 of p_l^* nu_l.
struct BergerResult {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Mean and standard error per slot, slots in lexicographic order of the
    /// 8-subsets of {1..16}.
    std::vector<double> mean;
    std::vector<double> stderr_;
    /// Least-squares scale c in mean ~ c * Phi, and cosine similarity.
    double scale = 0;
    double cosine = 0;
    /// Zero slots of Phi with nonzero sample variance: count, chi-square sum
    /// of (mean / stderr)^2, and how many lie beyond 3 standard errors.
    std::size_t zero_slots = 0;
    double zero_chi2 = 0;
    std::size_t zero_beyond_3sigma = 0;
    /// Largest |mean| / stderr over the zero slots, and the familywise
    /// 3-sigma threshold for that many slots (two-sided tail 0.0027 / count).
    double zero_max_z = 0;
    double zero_z_threshold = 0;
    /// RMS of (mean - scale * Phi) over all slots, using the first half of
    /// the samples and using all of them.
    double rms_half = 0;
    double rms_full = 0;
    std::size_t half_samples = 0;
};

/// All 8-subsets of {1..16} in lexicographic order.
const std::vector<BladeMask>& grade8_blades();

/// p_l^* nu_l coefficients for the line fixed by the unit (u, r),
/// r > -1, in the slot order of grade8_blades().
std::vector<double> line_volume_form(const double u[8], double r);

BergerResult berger_mc(std::size_t samples, std::uint64_t seed, std::size_t workers);

/// One entry of the Pontrjagin table: coeff * pi^{pi_power} * [form]; zero
/// when coeff is zero.
struct PontrjaginEntry {
    std::string name;
    Rational coeff;
    int pi_power = 0;
    std::string form;
};

struct PontrjaginReport {
    std::vector<PontrjaginEntry> bundle;   // p_1..p_4 of E
    std::vector<PontrjaginEntry> manifold; // p_1..p_4 of M
    std::vector<PontrjaginEntry> generator; // u, u^2
    std::string text;
};
PontrjaginReport pontrjagin_report();

} // namespace octoforms
