#include "octoforms/even_clifford.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "octoforms/clifford.hpp"

namespace octoforms {

ModelName parse_model_name(std::string_view name) {
    std::string s(name);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "eiii") return ModelName::EIII;
    if (s == "evi") return ModelName::EVI;
    if (s == "eviii") return ModelName::EVIII;
    throw std::invalid_argument("unsupported model: " + std::string(name));
}

std::string_view to_string(ModelName name) {
    switch (name) {
    case ModelName::EIII: return "EIII";
    case ModelName::EVI: return "EVI";
    case ModelName::EVIII: return "EVIII";
    }
    return "?";
}

namespace {

SparseMatrix kron_sparse(const Matrix& a, const Matrix& b) { return SparseMatrix(kron(a, b)); }

} // namespace

EvenCliffordModel build_model(ModelName name) {
    const CliffordSystem spin9 = standard_system(StandardKind::spin9);
    EvenCliffordModel m;
    m.name = name;
    unsigned level = 0;
    switch (name) {
    case ModelName::EIII: level = 1; break;
    case ModelName::EVI: level = 2; break;
    case ModelName::EVIII: level = 3; break;
    }
    const std::size_t d = std::size_t{1} << level;
    m.ambient_dim = 16 * d;
    // complex structures: right multiplication by the imaginary units of
    // C, H or O, tensored with Id_16; for C this is [[0, -Id], [Id, 0]]
    for (std::size_t u = 1; u < d; ++u) {
        m.generators.push_back(kron_sparse(right_mult_matrix(CDElement::unit(level, u)), Matrix::identity(16)));
        m.squares.push_back(-1);
    }
    for (const auto& p : spin9.mats) {
        m.generators.push_back(kron_sparse(Matrix::identity(d), p));
        m.squares.push_back(1);
    }
    return m;
}

std::vector<SparseMatrix> lambda2_generators(const EvenCliffordModel& model) {
    std::vector<SparseMatrix> out;
    for (std::size_t a = 0; a < model.rank(); ++a)
        for (std::size_t b = a + 1; b < model.rank(); ++b) out.push_back(model.generators[a] * model.generators[b]);
    return out;
}

bool EIIITau2::identity_holds() const { return (tau2 + Rational(3) * omega_sq).is_zero(); }

EIIITau2 eiii_tau2() {
    EvenCliffordModel m = build_model(ModelName::EIII);
    const std::size_t r = m.rank();
    FormMatrix psi(r, m.ambient_dim);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            psi.set(a, b, kahler_form((m.generators[a] * m.generators[b]).to_dense()));
    EIIITau2 out;
    out.tau2 = charpoly_coeffs(psi, 2).at(1);
    out.omega = kahler_form(m.generators[0].to_dense());
    out.omega_sq = wedge(out.omega, out.omega);
    return out;
}

Matrix m_uv(const CDElement& u, const CDElement& v) {
    if (u.level() != 3 || v.level() != 3) throw std::invalid_argument("m_uv: u and v must be octonions");
    const Matrix z = Matrix::zero(8, 8);
    return block2x2(-(right_mult_matrix(u) * right_mult_matrix(conjugate(v))), z, z,
                    -(right_mult_matrix(conjugate(u)) * right_mult_matrix(v)));
}

std::vector<CDElement> grassmann_phi_apply(const CDElement& u, const CDElement& v,
                                           const std::vector<CDElement>& tangent) {
    if (tangent.size() % 2 != 0) throw std::invalid_argument("grassmann_phi_apply: tangent length must be even");
    const Matrix m = m_uv(u, v);
    std::vector<CDElement> out;
    out.reserve(tangent.size());
    for (std::size_t i = 0; i < tangent.size(); i += 2) {
        if (tangent[i].level() != 3 || tangent[i + 1].level() != 3)
            throw std::invalid_argument("grassmann_phi_apply: tangent entries must be octonions");
        std::vector<Rational> x(tangent[i].coeffs().begin(), tangent[i].coeffs().end());
        x.insert(x.end(), tangent[i + 1].coeffs().begin(), tangent[i + 1].coeffs().end());
        std::vector<Rational> y = mat_vec(m, x);
        out.emplace_back(3, std::vector<Rational>(y.begin(), y.begin() + 8));
        out.emplace_back(3, std::vector<Rational>(y.begin() + 8, y.end()));
    }
    return out;
}

bool CensusReport::ok() const {
    for (const auto& r : rows)
        if (r.count != r.expected) return false;
    return true;
}

CensusReport structure_census() {
    CensusReport rep;
    const CliffordSystem spin9 = standard_system(StandardKind::spin9);
    const CliffordSystem quat = standard_system(StandardKind::quaternionic_Sp2Sp1);
    const CliffordSystem c6 = c6_system();
    rep.rows.push_back({"spin9 J_ab", independence_count(all_compositions(spin9, 2)), 36});
    rep.rows.push_back({"spin9 J_abc", independence_count(all_compositions(spin9, 3)), 84});
    rep.rows.push_back({"C6 J_abc on R^16", independence_count(all_compositions(c6, 3)), 35});
    rep.rows.push_back({"quaternionic J_ab", independence_count(all_compositions(quat, 2)), 10});

    EvenCliffordModel eiii = build_model(ModelName::EIII);
    std::vector<SparseMatrix> gens;
    const std::size_t nine = eiii.rank() - 1; // position of I_9
    for (std::size_t a = 0; a < nine; ++a) gens.push_back(eiii.generators[a] * eiii.generators[nine]);
    rep.rows.push_back({"EIII lie{J_a9}", lie_closure_dim(gens, 200), 45});
    std::vector<SparseMatrix> spin9_part(gens.begin() + 1, gens.end());
    rep.rows.push_back({"EIII spin9 sub-closure", lie_closure_dim(spin9_part, 200), 36});
    return rep;
}

} // namespace octoforms
