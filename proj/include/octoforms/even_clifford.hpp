#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "octoforms/cayley_dickson.hpp"
#include "octoforms/exterior.hpp"
#include "octoforms/matrix.hpp"

namespace octoforms {

enum class ModelName { EIII, EVI, EVIII };

ModelName parse_model_name(std::string_view name);
std::string_view to_string(ModelName name);

/// Local basis of an even Clifford structure E^r on a model tangent space.
/// The first rank - 9 generators are complex structures (square -Id), the
/// last nine are the realified spin9 involutions (square Id).
struct EvenCliffordModel {
    ModelName name = ModelName::EIII;
    std::size_t ambient_dim = 0;
    std::vector<SparseMatrix> generators;
    std::vector<int> squares; // +1 or -1 per generator

    [[nodiscard]] std::size_t rank() const { return generators.size(); }
};

/// EIII on R^32, EVI on R^64 = H (x) R^16, EVIII on R^128 = O (x) R^16.
EvenCliffordModel build_model(ModelName name);

/// J_ab = gen_a gen_b for a < b, lexicographic.
std::vector<SparseMatrix> lambda2_generators(const EvenCliffordModel& model);

struct EIIITau2 {
    Multivector tau2;
    Multivector omega; // Kähler form of the complex structure generator
    Multivector omega_sq;
    [[nodiscard]] bool identity_holds() const;
};
/// tau_2 of the 10 x 10 matrix of Kähler forms of the J_ab on R^32.
EIIITau2 eiii_tau2();

/// diag(-R_u R_conj(v), -R_conj(u) R_v) on R^16.
Matrix m_uv(const CDElement& u, const CDElement& v);

/// m_uv applied to each consecutive pair of octonions.
std::vector<CDElement> grassmann_phi_apply(const CDElement& u, const CDElement& v,
                                           const std::vector<CDElement>& tangent);

struct CensusRow {
    std::string label;
    std::size_t count = 0;
    std::size_t expected = 0;
};
struct CensusReport {
    std::vector<CensusRow> rows;
    [[nodiscard]] bool ok() const;
};

/// Independence counts of compositions (spin9 pairs and triples, C_6
/// triples, quaternionic pairs) and the EIII closure dimensions.
CensusReport structure_census();

} // namespace octoforms
