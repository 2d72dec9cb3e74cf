#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "octoforms/matrix.hpp"

namespace octoforms {

/// m = (2k + 1) 2^p 16^q with 0 <= p <= 3.
struct HRDecomposition {
    std::size_t m = 0;
    std::size_t k = 0;
    unsigned p = 0;
    unsigned q = 0;
};

HRDecomposition hr_decompose(std::size_t m);
/// 2^p + 8q - 1
std::size_t sigma(std::size_t m);

/// Linear vector fields x -> A_i x on S^{m-1}. Stored sparse: every field
/// here is a signed permutation matrix.
struct VectorFieldSystem {
    std::size_t m = 0;
    std::vector<SparseMatrix> fields;
    /// Construction notes, e.g. a printed formula that had to be replaced.
    std::vector<std::string> notes;
};

struct FieldReport {
    bool skew = true;
    bool orthogonal = true;    // A^T A = Id
    bool anticommuting = true; // A_i^T A_j + A_j^T A_i = 0
    bool sampled = true;       // pointwise checks at random rational points
    std::string first_failure;

    [[nodiscard]] bool ok() const { return skew && orthogonal && anticommuting && sampled; }
};

FieldReport verify_system(const VectorFieldSystem& v, std::size_t samples = 8, std::uint64_t seed = 0);

/// Maximal system of sigma(m) fields; supports q <= 2. Throws
/// std::invalid_argument for q >= 3 and std::domain_error if a construction
/// fails its own verification.
VectorFieldSystem build_fields(std::size_t m);

/// The eight fields I_a I_beta (a != beta) on R^16; beta in 1..9.
VectorFieldSystem fixed_beta_variant(std::size_t beta);

/// The S^511 system with the naive extra field D(L_i N) in place of
/// D(D_2(L_i N)); expected to fail verification.
VectorFieldSystem s511_naive_system();

/// (2k + 1)-fold diagonal extension.
VectorFieldSystem diagonal_extension(const VectorFieldSystem& v, std::size_t copies);

/// Formal left multiplication by imaginary unit `unit` on (s^1, ..., s^l),
/// l = 2^level, as an l x l signed permutation: row g has the sign and block
/// of the coefficient of e_g. Printed rows are transcribed by hand from the
/// literature (one of them is misprinted); table rows come from the
/// Cayley–Dickson product.
Matrix formal_left_printed(unsigned level, std::size_t unit);
Matrix formal_left_table(unsigned level, std::size_t unit);

} // namespace octoforms
