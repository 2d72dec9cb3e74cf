#include "octoforms/sphere_fields.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "octoforms/cayley_dickson.hpp"
#include "octoforms/clifford.hpp"

namespace octoforms {

HRDecomposition hr_decompose(std::size_t m) {
    if (m == 0) throw std::invalid_argument("hr_decompose: m must be >= 1");
    HRDecomposition d;
    d.m = m;
    unsigned t = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++t;
    }
    d.q = t / 4;
    d.p = t % 4;
    d.k = (m - 1) / 2;
    return d;
}

std::size_t sigma(std::size_t m) {
    HRDecomposition d = hr_decompose(m);
    return (std::size_t{1} << d.p) + 8 * d.q - 1;
}

namespace {

SparseMatrix diag_pm(std::size_t half) {
    SparseMatrix d(2 * half, 2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        d.set(i, i, 1);
        d.set(half + i, half + i, -1);
    }
    return d;
}

SparseMatrix kron_identity(const Matrix& a, std::size_t n) {
    SparseMatrix out(a.rows() * n, a.cols() * n);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero())
                for (std::size_t i = 0; i < n; ++i) out.set(r * n + i, c * n + i, a(r, c));
    return out;
}

const CliffordSystem& spin9() {
    static const CliffordSystem c = standard_system(StandardKind::spin9);
    return c;
}

// J_a = I_a I_9, a = 1..8
Matrix j_alpha(std::size_t a) { return spin9().mats[a - 1] * spin9().mats[8]; }

// D: (x, y) -> (x, -y) on every sedenion of R^{16 l}
SparseMatrix conjugation_d(std::size_t l) { return block_diagonal(diag_pm(8), l); }

// Hand-transcribed rows of the formal left multiplications, basis (1, i, ..., h);
// entry g is the signed (1-based) block whose coefficient is e_g.
const std::vector<std::vector<int>>& printed_rows(unsigned level) {
    static const std::vector<std::vector<int>> l1 = {{-2, 1}};
    static const std::vector<std::vector<int>> l2 = {
        {-2, 1, -4, 3},
        {-3, 4, 1, -2},
        {-4, -3, 2, 1},
    };
    static const std::vector<std::vector<int>> l3 = {
        {-2, 1, -4, 3, -6, 5, 8, -7}, {-3, 4, 1, -2, -7, -8, 5, 6}, {-4, -3, 2, 1, -8, 7, -6, 5},
        {-5, 6, 7, 6, 1, -2, -3, -4}, {-6, -5, 8, -7, 2, 1, 4, -3}, {-7, -8, -5, 6, 3, -4, 1, 2},
        {-8, 7, -6, -5, 4, 3, -2, 1},
    };
    switch (level) {
    case 1: return l1;
    case 2: return l2;
    case 3: return l3;
    }
    throw std::invalid_argument("formal left multiplication: level must be 1, 2 or 3");
}

} // namespace

Matrix formal_left_printed(unsigned level, std::size_t unit) {
    const auto& rows = printed_rows(level);
    if (unit == 0 || unit > rows.size()) throw std::out_of_range("formal_left_printed: bad unit");
    const std::size_t l = std::size_t{1} << level;
    Matrix out(l, l);
    for (std::size_t g = 0; g < l; ++g) {
        const int e = rows[unit - 1][g];
        out(g, static_cast<std::size_t>(std::abs(e) - 1)) += e < 0 ? -1 : 1;
    }
    return out;
}

Matrix formal_left_table(unsigned level, std::size_t unit) {
    if (level < 1 || level > 3) throw std::invalid_argument("formal_left_table: level must be 1, 2 or 3");
    const std::size_t l = std::size_t{1} << level;
    if (unit == 0 || unit >= l) throw std::out_of_range("formal_left_table: bad unit");
    return left_mult_matrix(CDElement::unit(level, unit));
}

FieldReport verify_system(const VectorFieldSystem& v, std::size_t samples, std::uint64_t seed) {
    FieldReport rep;
    auto fail = [&rep](bool& flag, std::string what) {
        if (rep.first_failure.empty()) rep.first_failure = std::move(what);
        flag = false;
    };
    const std::size_t n = v.fields.size();
    std::vector<SparseMatrix> tr;
    for (std::size_t i = 0; i < n; ++i) {
        const SparseMatrix& a = v.fields[i];
        if (a.rows() != v.m || a.cols() != v.m) {
            fail(rep.skew, "field " + std::to_string(i + 1) + " has wrong shape");
            return rep;
        }
        tr.push_back(transpose(a));
        if (!is_skew(a)) fail(rep.skew, "field " + std::to_string(i + 1) + " is not skew");
        if (!is_identity(tr[i] * a)) fail(rep.orthogonal, "field " + std::to_string(i + 1) + " is not orthogonal");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(tr[i] * v.fields[j] + tr[j] * v.fields[i]).is_zero())
                fail(rep.anticommuting,
                     "fields " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not orthogonal");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-20, 20);
    for (std::size_t s = 0; s < samples && rep.sampled; ++s) {
        std::vector<Rational> x(v.m);
        Rational norm2;
        for (auto& c : x) {
            c = Rational(d(rng), 1 + std::abs(d(rng)));
            norm2.add_product(c, c);
        }
        std::vector<std::vector<Rational>> ax;
        for (const auto& a : v.fields) ax.push_back(mat_vec(a, x));
        auto dotv = [](const std::vector<Rational>& p, const std::vector<Rational>& q) {
            Rational s;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (!p[i].is_zero() && !q[i].is_zero()) s.add_product(p[i], q[i]);
            return s;
        };
        for (std::size_t i = 0; i < n && rep.sampled; ++i) {
            if (!dotv(ax[i], x).is_zero()) fail(rep.sampled, "field " + std::to_string(i + 1) + " not tangent at a sample");
            for (std::size_t j = i; j < n && rep.sampled; ++j) {
                Rational expect = i == j ? norm2 : Rational();
                if (dotv(ax[i], ax[j]) != expect)
                    fail(rep.sampled, "fields " + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                          " not orthonormal at a sample");
            }
        }
    }
    return rep;
}

VectorFieldSystem diagonal_extension(const VectorFieldSystem& v, std::size_t copies) {
    if (copies == 0) throw std::invalid_argument("diagonal_extension: copies must be >= 1");
    VectorFieldSystem out;
    out.m = v.m * copies;
    out.notes = v.notes;
    for (const auto& f : v.fields) out.fields.push_back(block_diagonal(f, copies));
    return out;
}

namespace {

VectorFieldSystem q0_fields(unsigned p) {
    VectorFieldSystem v;
    v.m = std::size_t{1} << p;
    for (std::size_t u = 1; u < v.m; ++u) v.fields.emplace_back(right_mult_matrix(CDElement::unit(p, u)));
    return v;
}

VectorFieldSystem q1_fields(unsigned p) {
    const std::size_t l = std::size_t{1} << p;
    VectorFieldSystem v;
    v.m = 16 * l;
    for (std::size_t a = 1; a <= 8; ++a) v.fields.push_back(block_diagonal(SparseMatrix(j_alpha(a)), l));
    if (p == 0) return v;
    const SparseMatrix d = conjugation_d(l);
    for (std::size_t u = 1; u < l; ++u) v.fields.push_back(d * kron_identity(formal_left_printed(p, u), 16));
    if (verify_system(v, 2).ok()) return v;

    // fall back to the Cayley–Dickson rows for the units whose printed row
    // disagrees with the table, and say so
    VectorFieldSystem fixed;
    fixed.m = v.m;
    fixed.fields.assign(v.fields.begin(), v.fields.begin() + 8);
    static const char* names = "1ijkefgh";
    for (std::size_t u = 1; u < l; ++u) {
        Matrix printed = formal_left_printed(p, u);
        Matrix table = formal_left_table(p, u);
        if (printed != table)
            fixed.notes.push_back(std::string("printed formal left multiplication L_") + names[u] +
                                  " fails the field conditions; replaced by the multiplication-table row");
        fixed.fields.push_back(d * kron_identity(table, 16));
    }
    return fixed;
}

// D(block(J_a) N) on R^256: J_a acting on the column of 16 sedenions
SparseMatrix level2_field(std::size_t a) { return conjugation_d(16) * kron_identity(j_alpha(a), 16); }

VectorFieldSystem q2_fields(unsigned p, bool naive) {
    const std::size_t l = std::size_t{1} << p; // copies of R^256
    VectorFieldSystem v;
    v.m = 256 * l;
    for (std::size_t a = 1; a <= 8; ++a) v.fields.push_back(block_diagonal(SparseMatrix(j_alpha(a)), 16 * l));
    for (std::size_t a = 1; a <= 8; ++a) v.fields.push_back(block_diagonal(level2_field(a), l));
    if (p == 0) return v;
    const SparseMatrix d = conjugation_d(16 * l);
    const SparseMatrix d2 = block_diagonal(diag_pm(128), l);
    for (std::size_t u = 1; u < l; ++u) {
        SparseMatrix left = kron_identity(formal_left_table(p, u), 256);
        v.fields.push_back(naive ? d * left : d * (d2 * left));
    }
    return v;
}

} // namespace

VectorFieldSystem build_fields(std::size_t m) {
    HRDecomposition hr = hr_decompose(m);
    if (hr.q >= 3)
        throw std::invalid_argument("build_fields: m = " + std::to_string(m) + " has q = " + std::to_string(hr.q) +
                                    "; only q <= 2 is supported");
    VectorFieldSystem base;
    switch (hr.q) {
    case 0: base = q0_fields(hr.p); break;
    case 1: base = q1_fields(hr.p); break;
    default: base = q2_fields(hr.p, false); break;
    }
    if (hr.q == 2 && hr.p >= 2 && !verify_system(base, 1).ok())
        throw std::domain_error("build_fields: the D D_2 L_u construction fails for m = " +
                                std::to_string(base.m));
    return hr.k == 0 ? base : diagonal_extension(base, 2 * hr.k + 1);
}

VectorFieldSystem fixed_beta_variant(std::size_t beta) {
    if (beta == 0 || beta > 9) throw std::out_of_range("fixed_beta_variant: beta must be in 1..9");
    VectorFieldSystem v;
    v.m = 16;
    for (std::size_t a = 1; a <= 9; ++a)
        if (a != beta) v.fields.emplace_back(spin9().mats[a - 1] * spin9().mats[beta - 1]);
    return v;
}

VectorFieldSystem s511_naive_system() { return q2_fields(1, true); }

} // namespace octoforms
