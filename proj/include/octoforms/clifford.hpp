#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octoforms/matrix.hpp"

namespace octoforms {

/// (m+1) symmetric, pairwise anticommuting involutions P_0..P_m on R^n.
struct CliffordSystem {
    std::size_t n = 0;
    std::vector<Matrix> mats;

    [[nodiscard]] std::size_t m() const { return mats.empty() ? 0 : mats.size() - 1; }
};

struct CliffordReport {
    bool shapes_ok = true;
    bool symmetric = true;
    bool involutive = true;
    bool anticommuting = true;
    /// Description of the first violated axiom, empty on success.
    std::string first_failure;

    [[nodiscard]] bool ok() const { return shapes_ok && symmetric && involutive && anticommuting; }
};

CliffordReport verify(const CliffordSystem& c);

enum class StandardKind { u1, pauli_U2, quaternionic_Sp2Sp1, spin9 };

StandardKind parse_standard_kind(std::string_view name);
std::string_view to_string(StandardKind kind);

/// The uniform family on R^{2 * 2^level}: antidiag(Id, Id), the blocks
/// [[0, -R_u], [R_u, 0]] for the imaginary units u, and diag(Id, -Id).
CliffordSystem standard_system(unsigned level);
/// u1 = level 0 (R^2), pauli_U2 = level 1 (R^4), quaternionic = level 2
/// (R^8), spin9 = level 3 (R^16, the matrices I_1..I_9).
CliffordSystem standard_system(StandardKind kind);

/// Table value for irreducible Clifford systems, delta(8 + h) = 16 delta(h).
std::size_t delta(std::size_t m);

/// Extra endomorphisms for extend(): blockwise right multiplication by the
/// listed imaginary units of the given Cayley–Dickson level.
struct ExtraUnits {
    unsigned level = 0;
    std::vector<std::size_t> units;
};

/// C_m on R^N -> C_{m+1} on R^{2N}. Throws if the input fails verify or if the
/// requested extra units break the axioms.
CliffordSystem extend(const CliffordSystem& c, const std::optional<ExtraUnits>& extra = std::nullopt);

/// tr(P_0 P_1 ... P_m)
Rational trace_invariant(const CliffordSystem& c);

/// P_a P_b or P_a P_b P_c for strictly increasing 0-based positions.
Matrix compose_J(const CliffordSystem& c, std::span<const std::size_t> indices);

/// All compositions of the given arity (2 or 3) in lexicographic order.
std::vector<Matrix> all_compositions(const CliffordSystem& c, std::size_t arity);

/// Rank of the Gram matrix under <A, B> = tr(A^T B) / n.
std::size_t independence_count(std::span<const Matrix> mats);

/// Seven anticommuting involutions on R^16 (the first seven of spin9): a C_6
/// in its irreducible dimension 2 delta(6) = 16.
CliffordSystem c6_system();

} // namespace octoforms
