#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "octoforms/canonical_forms.hpp"
#include "octoforms/clifford.hpp"
#include "octoforms/even_clifford.hpp"
#include "octoforms/export.hpp"
#include "octoforms/hopf.hpp"
#include "octoforms/sphere_fields.hpp"

using namespace octoforms;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_workers() {
    if (const char* env = std::getenv("OCTOFORMS_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring OCTOFORMS_WORKERS=" << env << "\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

enum class Format { text, json, csv };

Format resolve_format(const std::string& name, bool json_flag) {
    if (json_flag) return Format::json;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw UsageError("unknown format: " + name);
}

void add_format(CLI::App* app, std::string& format, bool& json_flag) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app->add_flag("--json", json_flag, "Same as --format json");
}

// --- form ------------------------------------------------------------------

Multivector select_form(const std::string& which) {
    if (which == "spin9") return spin9_form();
    if (which == "tau4") return psi_charpoly()[3];
    if (which == "cgm") return cgm_form();
    if (which == "psi8") return kotrbaty_psi8().psi8_real;
    if (which == "tau8") return psi_charpoly()[7];
    throw UsageError("unknown form: " + which);
}

int run_form(const std::string& which, Format fmt) {
    Multivector f = select_form(which);
    if (fmt == Format::json) {
        std::cout << form_to_json(f).dump() << "\n";
    } else if (fmt == Format::csv) {
        std::cout << form_to_csv(f);
    } else {
        std::cout << which << ": n=" << f.n() << " grade=" << f.grade() << " terms=" << f.size() << "\n";
        for (const auto& [mask, c] : f.lex_terms()) {
            std::cout << "  e^{";
            bool first = true;
            for (std::size_t i : blade_indices(mask)) {
                std::cout << (first ? "" : ",") << i;
                first = false;
            }
            std::cout << "} " << c << "\n";
        }
    }
    return kPass;
}

// --- charpoly --------------------------------------------------------------

int run_charpoly(Format fmt) {
    const auto& tau = psi_charpoly();
    if (fmt == Format::json) {
        json out = json::array();
        for (std::size_t k = 0; k < tau.size(); ++k) out.push_back({{"k", k + 1}, {"form", form_to_json(tau[k])}});
        std::cout << out.dump() << "\n";
    } else {
        if (fmt == Format::csv) std::cout << "k;grade;terms\n";
        for (std::size_t k = 0; k < tau.size(); ++k) {
            if (fmt == Format::csv)
                std::cout << k + 1 << ';' << 2 * (k + 1) << ';' << tau[k].size() << "\n";
            else
                std::cout << "tau_" << k + 1 << ": " << (tau[k].is_zero() ? "0" : std::to_string(tau[k].size()) + " terms")
                          << "\n";
        }
        if (fmt == Format::text) std::cout << pontrjagin_report().text;
    }
    return kPass;
}

// --- fields ----------------------------------------------------------------

int run_fields(std::size_t m, bool verify_flag, Format fmt) {
    VectorFieldSystem v = build_fields(m);
    FieldReport rep;
    if (verify_flag) rep = verify_system(v);
    if (fmt == Format::json) {
        json fields = json::array();
        for (const auto& f : v.fields) fields.push_back(sparse_to_json(f));
        json out = {{"m", m}, {"sigma", sigma(m)}, {"count", v.fields.size()}, {"notes", v.notes}, {"fields", fields}};
        if (verify_flag) out["verify"] = {{"ok", rep.ok()}, {"first_failure", rep.first_failure}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "m=" << m << " sigma=" << sigma(m) << " fields=" << v.fields.size() << "\n";
        for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
        if (verify_flag)
            std::cout << "verify: " << (rep.ok() ? "pass" : "FAIL " + rep.first_failure) << "\n";
    }
    return verify_flag && !rep.ok() ? kFail : kPass;
}

// --- hopf ------------------------------------------------------------------

int run_hopf(const std::vector<std::string>& point, Format fmt) {
    std::vector<Rational> c;
    if (point.size() == 16) {
        for (const auto& s : point) c.push_back(Rational::parse(s));
    } else if (point.size() == 32) {
        // numerator / denominator pairs
        for (std::size_t i = 0; i < 32; i += 2) c.push_back(Rational::parse(point[i]) / Rational::parse(point[i + 1]));
    } else {
        throw UsageError("--point takes 16 rationals or 32 integers (numerator, denominator pairs)");
    }
    SpherePoint16 p = SpherePoint16::from_coords(c);
    if (p.norm2() != Rational(1)) {
        std::cerr << "point is not on S^15 (|N|^2 = " << p.norm2() << ")\n";
        return kFail;
    }
    Lambda l = hopf_map(p);
    auto s = sections(p);
    const std::vector<Rational> n = p.coords();
    std::vector<Rational> inner;
    std::vector<Rational> rebuilt(16);
    for (std::size_t a = 0; a < 9; ++a) {
        Rational d;
        for (std::size_t i = 0; i < 16; ++i) {
            d.add_product(n[i], s[a][i]);
            rebuilt[i].add_product(l[a], s[a][i]);
        }
        inner.push_back(d);
    }
    const bool ok = rebuilt == n;
    if (fmt == Format::json) {
        json lj = json::array(), ij = json::array();
        for (std::size_t a = 0; a < 9; ++a) {
            lj.push_back(l[a].str());
            ij.push_back(inner[a].str());
        }
        std::cout << json{{"lambda", lj}, {"inner_products", ij}, {"reconstruction", ok}}.dump() << "\n";
    } else {
        for (std::size_t a = 0; a < 9; ++a)
            std::cout << "lambda_" << a + 1 << " = " << l[a] << "   <N, I_" << a + 1 << " N> = " << inner[a] << "\n";
        std::cout << "N = sum lambda_a I_a N: " << (ok ? "yes" : "NO") << "\n";
    }
    return ok ? kPass : kFail;
}

// --- clifford --------------------------------------------------------------

int run_clifford(const std::string& kind, std::size_t extend_steps, Format fmt) {
    CliffordSystem c = standard_system(parse_standard_kind(kind));
    for (std::size_t i = 0; i < extend_steps; ++i) c = extend(c);
    CliffordReport rep = verify(c);
    if (fmt == Format::json) {
        json mats = json::array();
        for (const auto& m : c.mats) mats.push_back(matrix_to_json(m));
        std::cout << json{{"kind", kind},       {"extend", extend_steps}, {"n", c.n},
                          {"m", c.m()},         {"ok", rep.ok()},         {"trace_invariant", trace_invariant(c).str()},
                          {"matrices", mats}}
                         .dump()
                  << "\n";
    } else {
        std::cout << kind << " extended " << extend_steps << "x: C_" << c.m() << " on R^" << c.n
                  << ", verify " << (rep.ok() ? "pass" : "FAIL " + rep.first_failure)
                  << ", trace invariant " << trace_invariant(c) << ", 2 delta(m) = " << 2 * delta(c.m()) << "\n";
    }
    return rep.ok() ? kPass : kFail;
}

// --- clifford-structure ----------------------------------------------------

int run_structure(const std::string& model_name, bool census, bool deep, Format fmt) {
    ModelName name = parse_model_name(model_name);
    if (name == ModelName::EVIII && !deep) throw UsageError("the EVIII closure needs --deep");
    EvenCliffordModel m = build_model(name);
    std::vector<SparseMatrix> j = lambda2_generators(m);
    const std::size_t closure = lie_closure_dim(j, 1000);
    json out = {{"model", to_string(name)}, {"ambient_dim", m.ambient_dim}, {"rank", m.rank()},
                {"lambda2_count", j.size()}, {"closure_dim", closure}};
    bool ok = true;
    if (name == ModelName::EIII) {
        EIIITau2 t = eiii_tau2();
        out["tau2_equals_minus_3_omega_sq"] = t.identity_holds();
        ok = ok && t.identity_holds();
    }
    CensusReport cr;
    if (census) {
        cr = structure_census();
        json rows = json::array();
        for (const auto& r : cr.rows) rows.push_back({{"label", r.label}, {"count", r.count}, {"expected", r.expected}});
        out["census"] = rows;
        ok = ok && cr.ok();
    }
    if (fmt == Format::json) {
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(name) << ": R^" << m.ambient_dim << ", rank " << m.rank() << ", " << j.size()
                  << " J_ab, Lie closure " << closure << "\n";
        if (out.contains("tau2_equals_minus_3_omega_sq"))
            std::cout << "tau_2 = -3 omega^2: " << (out["tau2_equals_minus_3_omega_sq"].get<bool>() ? "yes" : "NO")
                      << "\n";
        for (const auto& r : cr.rows) std::cout << "  " << r.label << ": " << r.count << " (expected " << r.expected << ")\n";
    }
    return ok ? kPass : kFail;
}

// --- berger ----------------------------------------------------------------

int run_berger(std::size_t samples, std::uint64_t seed, std::size_t workers, Format fmt) {
    BergerResult r = berger_mc(samples, seed, workers);
    if (fmt == Format::json) {
        json mean = json::array(), se = json::array();
        for (std::size_t i = 0; i < r.mean.size(); ++i) {
            mean.push_back(format_double(r.mean[i]));
            se.push_back(format_double(r.stderr_[i]));
        }
        std::cout << json{{"samples", r.samples},
                          {"seed", r.seed},
                          {"scale", format_double(r.scale)},
                          {"cosine", format_double(r.cosine)},
                          {"zero_slots", r.zero_slots},
                          {"zero_max_z", format_double(r.zero_max_z)},
                          {"zero_z_threshold", format_double(r.zero_z_threshold)},
                          {"zero_chi2", format_double(r.zero_chi2)},
                          {"mean", mean},
                          {"stderr", se}}
                         .dump()
                  << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "blade;mean;stderr\n";
        const auto& blades = grade8_blades();
        for (std::size_t i = 0; i < blades.size(); ++i) {
            bool first = true;
            for (std::size_t k : blade_indices(blades[i])) {
                std::cout << (first ? "" : "-") << k;
                first = false;
            }
            std::cout << ';' << format_double(r.mean[i]) << ';' << format_double(r.stderr_[i]) << "\n";
        }
    } else {
        std::cout << "samples " << r.samples << ", seed " << r.seed << "\n"
                  << "scale c = " << format_double(r.scale) << " (mean ~ c Phi)\n"
                  << "cosine = " << format_double(r.cosine) << "\n"
                  << "zero slots " << r.zero_slots << ": max |z| = " << format_double(r.zero_max_z)
                  << ", familywise threshold " << format_double(r.zero_z_threshold) << "\n";
    }
    return kPass;
}

// --- verify ----------------------------------------------------------------

int run_verify(bool deep, std::size_t berger_samples, std::uint64_t seed, std::size_t workers, Format fmt) {
    struct Line {
        std::string name;
        bool ok;
        std::string detail;
        double seconds;
    };
    std::vector<Line> lines;
    auto check = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        std::pair<bool, std::string> r;
        try {
            r = f();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        lines.push_back({name, r.first, r.second, s});
        if (fmt == Format::text)
            std::cout << (r.first ? "PASS " : "FAIL ") << name << ": " << r.second << "\n" << std::flush;
    };

    check("clifford systems", [] {
        bool ok = true;
        for (auto k : {StandardKind::u1, StandardKind::pauli_U2, StandardKind::quaternionic_Sp2Sp1, StandardKind::spin9})
            ok = ok && verify(standard_system(k)).ok();
        CliffordSystem c9 = extend(standard_system(StandardKind::spin9));
        ok = ok && verify(c9).ok() && c9.n == 32;
        return std::pair{ok, std::string("four standard systems and C_9 on R^32")};
    });
    check("charpoly shape", [] {
        const auto& t = psi_charpoly();
        bool ok = true;
        for (std::size_t k : {0, 1, 2, 4, 5, 6, 8}) ok = ok && t[k].is_zero();
        return std::pair{ok, std::string("tau_1,2,3,5,6,7,9 = 0")};
    });
    check("360-factor", [] {
        const Multivector& phi = spin9_form();
        bool ok = psi_charpoly()[3] == Rational(360) * phi;
        return std::pair{ok, std::string("tau_4 = 360 Phi")};
    });
    check("702-count", [] {
        std::size_t n = spin9_form().size();
        return std::pair{n == 702, std::to_string(n) + " monomials"};
    });
    check("CGM", [] { return std::pair{cgm_form() == Rational(-4) * psi_charpoly()[3], std::string("Omega = -4 tau_4")}; });
    check("F = 2P^2 - 4Q", [seed] {
        FpqReport r = fpq_identity_check(100, seed);
        return std::pair{r.ok(), std::to_string(r.trials - r.failures) + "/" + std::to_string(r.trials)};
    });
    check("Kotrbaty", [] {
        KotrbatyForms k = kotrbaty_psi8();
        bool ok = k.psi8.is_real() && k.psi8_real == Rational(-2880) * spin9_form();
        return std::pair{ok, std::string("Psi_8 real, = -2880 Phi")};
    });
    check("tau_2(theta)", [] {
        QuaternionicForms q = quaternionic_forms();
        Multivector t2 = charpoly_coeffs(q.theta, 2).at(1);
        bool ok = t2 == Rational(-2) * q.omega_l && t2.coeff({1, 2, 3, 4}) == Rational(-12);
        return std::pair{ok, std::string("tau_2 = -2 Omega_L, e^{1234} -> -12")};
    });
    check("pontrjagin", [] {
        PontrjaginReport r = pontrjagin_report();
        bool ok = r.manifold.size() == 4 && r.manifold[1].coeff == Rational(-45, 2) && r.manifold[3].coeff == Rational(-13, 256) &&
                  r.manifold[0].coeff.is_zero() && r.manifold[2].coeff.is_zero();
        return std::pair{ok, std::string("p_2(M) = -45/2, p_4(M) = -13/256")};
    });
    check("lambda-identity", [seed] {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
        for (int t = 0; t < 200; ++t) {
            std::vector<Rational> v;
            for (int i = 0; i < 15; ++i) v.emplace_back(num(rng), den(rng));
            SpherePoint16 p = SpherePoint16::from_coords(rational_sphere_point(v));
            Lambda l = hopf_map(p);
            auto s = sections(p);
            std::vector<Rational> rebuilt(16);
            for (std::size_t a = 0; a < 9; ++a)
                for (std::size_t i = 0; i < 16; ++i) rebuilt[i].add_product(l[a], s[a][i]);
            if (rebuilt != p.coords()) return std::pair{false, std::string("reconstruction failed")};
        }
        return std::pair{true, std::string("N = sum lambda_a I_a N at 200 points")};
    });
    check("field systems", [] {
        std::string bad;
        for (std::size_t m : {2, 4, 8, 16, 32, 48, 64, 128, 256, 512}) {
            VectorFieldSystem v = build_fields(m);
            if (v.fields.size() != sigma(m) || !verify_system(v, 2).ok()) bad += " " + std::to_string(m);
        }
        bool naive_fails = !verify_system(s511_naive_system(), 1).ok();
        return std::pair{bad.empty() && naive_fails,
                         bad.empty() ? std::string("sigma(m) fields up to 512; naive S^511 field rejected")
                                     : "failed for m =" + bad};
    });
    check("closures", [deep] {
        CensusReport c = structure_census();
        bool ok = c.ok() && eiii_tau2().identity_holds();
        std::string d = "census 36/84/35/10, closures 45/36, EIII tau_2 = -3 omega^2";
        if (deep) {
            std::size_t e8 = lie_closure_dim(lambda2_generators(build_model(ModelName::EVIII)), 1000);
            d += ", EVIII closure " + std::to_string(e8);
        }
        return std::pair{ok, d};
    });
    if (berger_samples > 0)
        check("berger", [=] {
            BergerResult r = berger_mc(berger_samples, seed, workers);
            bool ok = std::abs(r.cosine) >= 0.99 && r.zero_max_z <= r.zero_z_threshold;
            return std::pair{ok, "cosine " + format_double(r.cosine) + ", scale " + format_double(r.scale)};
        });

    bool all = true;
    for (const auto& l : lines) all = all && l.ok;
    if (fmt == Format::json) {
        json out = json::array();
        for (const auto& l : lines) out.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        std::cout << json{{"ok", all}, {"checks", out}}.dump() << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "check;ok;detail\n";
        for (const auto& l : lines) std::cout << l.name << ';' << (l.ok ? "pass" : "fail") << ';' << l.detail << "\n";
    } else {
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around the Spin(9) canonical 8-form"};
    app.require_subcommand(1);

    std::string format = "text";
    bool json_flag = false;
    std::uint64_t seed = 0;
    std::size_t workers = default_workers();
    bool deep = false;

    std::string which = "spin9";
    auto* form = app.add_subcommand("form", "Export a canonical form");
    form->add_option("--which", which, "spin9 | tau4 | cgm | psi8 | tau8")
        ->check(CLI::IsMember({"spin9", "tau4", "cgm", "psi8", "tau8"}));
    add_format(form, format, json_flag);

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of the spin9 psi matrix");
    add_format(charpoly, format, json_flag);

    std::size_t m = 16;
    bool verify_flag = false;
    auto* fields = app.add_subcommand("fields", "Maximal linear vector fields on S^{m-1}");
    fields->add_option("--m", m, "Ambient dimension")->required()->check(CLI::PositiveNumber);
    fields->add_flag("--verify", verify_flag, "Check the field conditions exactly");
    add_format(fields, format, json_flag);

    std::vector<std::string> point;
    auto* hopf = app.add_subcommand("hopf", "Hopf projection of a rational point of S^15");
    hopf->add_option("--point", point, "16 rationals p/q, or 32 integers as numerator/denominator pairs")->required();
    add_format(hopf, format, json_flag);

    std::string kind = "spin9";
    std::size_t extend_steps = 0;
    auto* clifford = app.add_subcommand("clifford", "Standard Clifford systems");
    clifford->add_option("--kind", kind, "u1 | pauli | quaternionic | spin9");
    clifford->add_option("--extend", extend_steps, "Number of extension steps")->check(CLI::Range(0, 4));
    add_format(clifford, format, json_flag);

    std::string model = "eiii";
    bool census = false;
    auto* structure = app.add_subcommand("clifford-structure", "Even Clifford structures on model spaces");
    structure->add_option("--model", model, "eiii | evi | eviii");
    structure->add_flag("--census", census, "Independence counts and closures");
    structure->add_flag("--deep", deep, "Allow the EVIII closure");
    add_format(structure, format, json_flag);

    std::size_t samples = 1000000;
    auto* berger = app.add_subcommand("berger", "Monte-Carlo average of the octonionic line volume forms");
    berger->add_option("--samples", samples, "Number of points of S^8")->check(CLI::PositiveNumber);
    berger->add_option("--seed", seed, "Seed");
    berger->add_option("--workers", workers, "Worker threads (default: OCTOFORMS_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    add_format(berger, format, json_flag);

    std::size_t berger_samples = 20000;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_flag("--deep", deep, "Include the EVIII closure");
    verify_cmd->add_option("--berger-samples", berger_samples, "Monte-Carlo samples (0 skips)");
    verify_cmd->add_option("--seed", seed, "Seed");
    verify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    add_format(verify_cmd, format, json_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        const Format fmt = resolve_format(format, json_flag);
        if (*form) return run_form(which, fmt);
        if (*charpoly) return run_charpoly(fmt);
        if (*fields) return run_fields(m, verify_flag, fmt);
        if (*hopf) return run_hopf(point, fmt);
        if (*clifford) return run_clifford(kind, extend_steps, fmt);
        if (*structure) return run_structure(model, census, deep, fmt);
        if (*berger) return run_berger(samples, seed, workers, fmt);
        if (*verify_cmd) return run_verify(deep, berger_samples, seed, workers, fmt);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
