#include "octoforms/clifford.hpp"

#include <stdexcept>
#include <string>

#include "octoforms/cayley_dickson.hpp"

namespace octoforms {

CliffordReport verify(const CliffordSystem& c) {
    CliffordReport rep;
    auto fail = [&rep](bool& flag, std::string what) {
        if (rep.first_failure.empty()) rep.first_failure = std::move(what);
        flag = false;
    };
    const Matrix id = Matrix::identity(c.n);
    for (std::size_t a = 0; a < c.mats.size(); ++a) {
        const Matrix& p = c.mats[a];
        if (p.rows() != c.n || p.cols() != c.n) {
            fail(rep.shapes_ok, "P_" + std::to_string(a) + " has wrong shape");
            return rep;
        }
        if (!is_symmetric(p)) fail(rep.symmetric, "P_" + std::to_string(a) + " is not symmetric");
        if (p * p != id) fail(rep.involutive, "P_" + std::to_string(a) + "^2 != Id");
    }
    for (std::size_t a = 0; a < c.mats.size(); ++a)
        for (std::size_t b = a + 1; b < c.mats.size(); ++b)
            if (!anticommutator(c.mats[a], c.mats[b]).is_zero())
                fail(rep.anticommuting,
                     "P_" + std::to_string(a) + " P_" + std::to_string(b) + " + P_" + std::to_string(b) + " P_" +
                         std::to_string(a) + " != 0");
    return rep;
}

StandardKind parse_standard_kind(std::string_view name) {
    if (name == "u1") return StandardKind::u1;
    if (name == "pauli_U2" || name == "pauli") return StandardKind::pauli_U2;
    if (name == "quaternionic_Sp2Sp1" || name == "quaternionic") return StandardKind::quaternionic_Sp2Sp1;
    if (name == "spin9") return StandardKind::spin9;
    throw std::invalid_argument("unknown Clifford system kind '" + std::string(name) + "'");
}

std::string_view to_string(StandardKind kind) {
    switch (kind) {
    case StandardKind::u1: return "u1";
    case StandardKind::pauli_U2: return "pauli_U2";
    case StandardKind::quaternionic_Sp2Sp1: return "quaternionic_Sp2Sp1";
    case StandardKind::spin9: return "spin9";
    }
    return "?";
}

CliffordSystem standard_system(unsigned level) {
    const std::size_t h = std::size_t{1} << level;
    const Matrix id = Matrix::identity(h);
    const Matrix zero = Matrix::zero(h, h);
    CliffordSystem c;
    c.n = 2 * h;
    c.mats.push_back(block2x2(zero, id, id, zero));
    for (std::size_t a = 1; a < h; ++a) {
        Matrix r = right_mult_matrix(CDElement::unit(level, a));
        c.mats.push_back(block2x2(zero, -r, r, zero));
    }
    c.mats.push_back(block2x2(id, zero, zero, -id));
    return c;
}

CliffordSystem standard_system(StandardKind kind) {
    switch (kind) {
    case StandardKind::u1: return standard_system(0u);
    case StandardKind::pauli_U2: return standard_system(1u);
    case StandardKind::quaternionic_Sp2Sp1: return standard_system(2u);
    case StandardKind::spin9: return standard_system(3u);
    }
    throw std::invalid_argument("standard_system: bad kind");
}

std::size_t delta(std::size_t m) {
    static constexpr std::size_t table[] = {0, 1, 2, 4, 4, 8, 8, 8, 8};
    if (m == 0) throw std::invalid_argument("delta: m must be >= 1");
    if (m <= 8) return table[m];
    return 16 * delta(m - 8);
}

CliffordSystem extend(const CliffordSystem& c, const std::optional<ExtraUnits>& extra) {
    if (c.mats.empty()) throw std::invalid_argument("extend: empty system");
    if (CliffordReport rep = verify(c); !rep.ok())
        throw std::invalid_argument("extend: input is not a Clifford system (" + rep.first_failure + ")");
    const std::size_t n = c.n;
    const Matrix id = Matrix::identity(n);
    const Matrix zero = Matrix::zero(n, n);
    CliffordSystem out;
    out.n = 2 * n;
    out.mats.push_back(block2x2(zero, id, id, zero));
    for (std::size_t a = 1; a < c.mats.size(); ++a) {
        Matrix p0a = c.mats[0] * c.mats[a];
        out.mats.push_back(block2x2(zero, -p0a, p0a, zero));
    }
    if (extra) {
        const std::size_t h = std::size_t{1} << extra->level;
        if (n % h != 0)
            throw std::invalid_argument("extend: dimension " + std::to_string(n) + " is not a multiple of " +
                                        std::to_string(h));
        for (std::size_t u : extra->units) {
            if (u == 0 || u >= h) throw std::invalid_argument("extend: extra unit index out of range");
            Matrix r = block_diagonal(right_mult_matrix(CDElement::unit(extra->level, u)), n / h);
            out.mats.push_back(block2x2(zero, -r, r, zero));
        }
    }
    out.mats.push_back(block2x2(id, zero, zero, -id));
    if (CliffordReport rep = verify(out); !rep.ok())
        throw std::domain_error("extend: result fails the Clifford axioms (" + rep.first_failure + ")");
    return out;
}

Rational trace_invariant(const CliffordSystem& c) {
    if (c.mats.empty()) throw std::invalid_argument("trace_invariant: empty system");
    Matrix p = c.mats[0];
    for (std::size_t a = 1; a < c.mats.size(); ++a) p = p * c.mats[a];
    return trace(p);
}

Matrix compose_J(const CliffordSystem& c, std::span<const std::size_t> indices) {
    if (indices.size() != 2 && indices.size() != 3)
        throw std::invalid_argument("compose_J: expected 2 or 3 indices");
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] >= c.mats.size()) throw std::out_of_range("compose_J: index out of range");
        if (t > 0 && indices[t] <= indices[t - 1])
            throw std::invalid_argument("compose_J: indices must be strictly increasing");
    }
    Matrix out = c.mats[indices[0]];
    for (std::size_t t = 1; t < indices.size(); ++t) out = out * c.mats[indices[t]];
    return out;
}

std::vector<Matrix> all_compositions(const CliffordSystem& c, std::size_t arity) {
    std::vector<Matrix> out;
    const std::size_t k = c.mats.size();
    if (arity == 2) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) out.push_back(c.mats[a] * c.mats[b]);
    } else if (arity == 3) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) {
                Matrix ab = c.mats[a] * c.mats[b];
                for (std::size_t d = b + 1; d < k; ++d) out.push_back(ab * c.mats[d]);
            }
    } else {
        throw std::invalid_argument("all_compositions: arity must be 2 or 3");
    }
    return out;
}

std::size_t independence_count(std::span<const Matrix> mats) {
    if (mats.empty()) return 0;
    const std::size_t n = mats.front().rows();
    for (const auto& m : mats)
        if (m.rows() != mats.front().rows() || m.cols() != mats.front().cols())
            throw std::invalid_argument("independence_count: shape mismatch");
    Matrix gram(mats.size(), mats.size());
    const Rational scale(1, static_cast<long long>(n));
    for (std::size_t a = 0; a < mats.size(); ++a)
        for (std::size_t b = a; b < mats.size(); ++b) {
            Rational g = frobenius(mats[a], mats[b]) * scale;
            gram(a, b) = g;
            gram(b, a) = g;
        }
    return rank(gram);
}

CliffordSystem c6_system() {
    CliffordSystem spin9 = standard_system(StandardKind::spin9);
    CliffordSystem c;
    c.n = spin9.n;
    c.mats.assign(spin9.mats.begin(), spin9.mats.begin() + 7);
    return c;
}

} // namespace octoforms
