#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "spinorlab/cosmology.hpp"
#include "spinorlab/elko.hpp"
#include "spinorlab/field_redef.hpp"
#include "spinorlab/fierz.hpp"
#include "spinorlab/lv_dirac.hpp"
#include "spinorlab/torsion.hpp"

namespace spinorlab::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    Tolerance tol;
    std::uint64_t seed = 1;
    std::string format;
    std::string out;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<json> rows;  // each a json array aligned with columns
};

struct Report {
    std::string command;
    std::string default_format = "json";
    json body = json::object();
    std::optional<Table> table;
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

// ---------- json helpers ----------

json jc(cplx z) { return json::array({z.real(), z.imag()}); }

json jspinor(const Spinor& s) {
    json c = json::array();
    for (int i = 0; i < 4; ++i) c.push_back(jc(s.c(i)));
    return {{"rep", std::string(to_string(s.rep))}, {"components", c}};
}

json jmatrix(const Matrix4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json r = json::array();
        for (int j = 0; j < 4; ++j) r.push_back(jc(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

json jvec(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

json jmat(const Mat4r& m) {
    json r = json::array();
    for (const auto& row : m) r.push_back(jvec(row));
    return r;
}

json conventions_json() {
    namespace c = conventions;
    return {{"metric", c::metric},           {"gamma5", c::gamma5},
            {"gamma5_dirac", c::gamma5_dirac}, {"gamma5_weyl", c::gamma5_weyl},
            {"dirac_gammas", c::dirac_gammas}, {"weyl_gammas", c::weyl_gammas},
            {"sigma_munu", c::sigma_munu},   {"omega", c::omega},
            {"S_tensor", c::S_tensor},       {"levi_civita", c::levi_civita},
            {"charge_conjugation", c::charge_conjugation}};
}

json bilinears_json(const Bilinears& b) {
    return {{"rep", std::string(to_string(b.rep))}, {"sigma", b.sigma}, {"omega", b.omega},
            {"J_lower", jvec(b.J)},                 {"K_lower", jvec(b.K)}, {"S_lower", jmat(b.S)}};
}

json classification_json(const Classification& c) {
    json j;
    j["class"] = c.ok() ? json(c.id()) : json(nullptr);
    j["class_name"] = class_name(c.id());
    j["regular"] = c.regular();
    j["singular"] = c.singular();
    j["outside"] = c.ok() ? json(nullptr) : json(outside_name(c.outside));
    j["zero"] = {{"sigma", c.sigma_zero}, {"omega", c.omega_zero}, {"J", c.J_zero}, {"K", c.K_zero},
                 {"S", c.S_zero}};
    j["scale"] = c.scale;
    j["threshold"] = c.threshold;
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": malformed JSON: " + e.what());
    }
}

double num(const json& j, const std::string& what) {
    if (!j.is_number()) throw UsageError(what + ": expected a number");
    return j.get<double>();
}

double num_or(const json& obj, const std::string& key, double dflt) {
    if (!obj.contains(key)) return dflt;
    return num(obj.at(key), key);
}

cplx parse_cplx(const json& j, const std::string& what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw UsageError(what + ": expected [re, im]");
    return {num(j[0], what), num(j[1], what)};
}

Spinor parse_spinor(const json& j, const std::string& what = "spinor") {
    if (!j.is_object()) throw UsageError(what + ": expected an object with rep and components");
    if (!j.contains("rep") || !j.at("rep").is_string()) throw UsageError(what + ": missing string field rep");
    Representation rep;
    try {
        rep = parse_representation(j.at("rep").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw UsageError(what + ": " + e.what());
    }
    if (!j.contains("components") || !j.at("components").is_array() || j.at("components").size() != 4)
        throw UsageError(what + ": components must hold four [re, im] pairs");
    Vector4c c;
    for (int i = 0; i < 4; ++i) c(i) = parse_cplx(j.at("components")[static_cast<std::size_t>(i)], what);
    return {c, rep};
}

Vec4 parse_vec4(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 4) throw UsageError(what + ": expected 4 numbers");
    Vec4 v{};
    for (std::size_t i = 0; i < 4; ++i) v[i] = num(j[i], what);
    return v;
}

Vec4 vec4_or(const json& obj, const std::string& key) {
    return obj.contains(key) ? parse_vec4(obj.at(key), key) : Vec4{};
}

Mat4r mat4_or(const json& obj, const std::string& key) {
    Mat4r m{};
    if (!obj.contains(key)) return m;
    const json& j = obj.at(key);
    if (!j.is_array() || j.size() != 4) throw UsageError(key + ": expected a 4x4 array");
    for (std::size_t i = 0; i < 4; ++i) m[i] = parse_vec4(j[i], key);
    return m;
}

template <std::size_t R>
void fill_tensor(const json& j, Tensor<R>& t, const std::string& what, std::array<int, R> ix = {}, std::size_t d = 0) {
    if (d == R) {
        std::apply([&](auto... i) { t(i...) = num(j, what); }, ix);
        return;
    }
    if (!j.is_array() || j.size() != 4) throw UsageError(what + ": expected nested 4-arrays of rank " + std::to_string(R));
    for (int i = 0; i < 4; ++i) {
        ix[d] = i;
        fill_tensor(j[static_cast<std::size_t>(i)], t, what, ix, d + 1);
    }
}

template <std::size_t R>
Tensor<R> tensor_or(const json& obj, const std::string& key) {
    Tensor<R> t;
    if (obj.contains(key)) fill_tensor<R>(obj.at(key), t, key);
    return t;
}

Vec3 parse_vec3_arg(const std::string& s, const std::string& what) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(what + ": cannot parse '" + item + "' as a number");
        }
    }
    if (v.size() != 3) throw UsageError(what + ": expected three comma-separated numbers");
    return {v[0], v[1], v[2]};
}

// ---------- output ----------

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    }
    return v.dump();
}

void emit(const Report& r, const Settings& s, std::ostream& os) {
    const std::string format = s.format.empty() ? r.default_format : s.format;
    if (format == "json") {
        json doc;
        doc["command"] = r.command;
        doc["status"] = r.pass ? "pass" : "fail";
        doc["failures"] = r.failures;
        doc["tolerances"] = {{"abs", s.tol.abs}, {"rel", s.tol.rel}};
        doc["seed"] = s.seed;
        doc["conventions"] = conventions_json();
        for (const auto& [k, v] : r.body.items()) doc[k] = v;
        if (r.table) {
            json rows = json::array();
            for (const auto& row : r.table->rows) {
                json o;
                for (std::size_t i = 0; i < r.table->columns.size(); ++i) o[r.table->columns[i]] = row[i];
                rows.push_back(o);
            }
            doc["rows"] = rows;
        }
        os << doc.dump(2) << "\n";
        return;
    }
    os << "# command: " << r.command << "\n";
    os << "# status: " << (r.pass ? "pass" : "fail") << "\n";
    for (const auto& f : r.failures) os << "# failure: " << f << "\n";
    os << "# tol_abs: " << json(s.tol.abs).dump() << "\n";
    os << "# tol_rel: " << json(s.tol.rel).dump() << "\n";
    os << "# seed: " << s.seed << "\n";
    const json conv = conventions_json();
    for (const auto& [k, v] : conv.items()) os << "# convention." << k << ": " << v.get<std::string>() << "\n";
    if (r.table) {
        if (!r.body.empty()) os << "# summary: " << r.body.dump() << "\n";
        for (std::size_t i = 0; i < r.table->columns.size(); ++i) os << (i ? "," : "") << r.table->columns[i];
        os << "\n";
        for (const auto& row : r.table->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << "\n";
        }
        return;
    }
    os << "key,value\n";
    const json flat = r.body.flatten();
    for (const auto& [k, v] : flat.items()) os << csv_cell(json(k)) << "," << csv_cell(v) << "\n";
}

// ---------- commands ----------

Report cmd_classify(const std::vector<std::string>& files, const Settings& s) {
    Report r;
    r.command = "classify";
    Table t;
    t.columns = {"file", "rep", "class", "class_name", "regular", "sigma", "omega", "outside"};
    json results = json::array();
    for (const auto& f : files) {
        const Spinor psi = parse_spinor(read_json_file(f), f);
        const Bilinears b = bilinears(psi);
        const Classification c = classify(b, s.tol);
        json rec;
        rec["file"] = f;
        const json cls = classification_json(c);
        for (const auto& [k, v] : cls.items()) rec[k] = v;
        rec["bilinears"] = bilinears_json(b);
        results.push_back(rec);
        t.rows.push_back(json::array({f, std::string(to_string(psi.rep)), rec["class"], class_name(c.id()),
                                      c.regular(), b.sigma, b.omega, rec["outside"]}));
    }
    if (files.size() == 1) r.body["class"] = results[0]["class"];
    r.body["results"] = results;
    if (s.format == "csv") r.table = t;
    return r;
}

Report cmd_fierz(const std::string& file, int quadruples, const Settings& s) {
    Report r;
    r.command = "fierz";
    const Spinor psi = parse_spinor(read_json_file(file), file);
    const Bilinears b = bilinears(psi);
    const FierzResiduals f = fierz_residuals(b);
    const double thr = s.tol.threshold(f.scale);
    r.body["bilinears"] = bilinears_json(b);
    r.body["classification"] = classification_json(classify(b, s.tol));
    r.body["identities"] = {{"J2_minus_sigma2_plus_omega2", f.j2_sigma2_omega2},
                            {"J2_plus_K2", f.j2_plus_k2},
                            {"J_dot_K", f.j_dot_k},
                            {"wedge", f.wedge},
                            {"scale", f.scale},
                            {"threshold", thr}};
    r.require(f.worst() <= thr, "Fierz identity residual above threshold");
    const Matrix4 Z = aggregate(b);
    const double zr = max_abs(Z - 4.0 * psi.c * dirac_adjoint(psi));
    r.body["aggregate"] = jmatrix(Z);
    r.body["aggregate_vs_outer_product"] = zr;
    r.require(zr <= s.tol.threshold(max_abs(Z)), "aggregate differs from 4 psi psibar");

    double worst = 0, scale = 0;
    for (int q = 0; q < quadruples; ++q) {
        auto rng = sample_rng(s.seed, static_cast<std::uint64_t>(q));
        Sampler smp{rng};
        const Spinor u1{smp.vec4(), psi.rep}, u2{smp.vec4(), psi.rep}, u3{smp.vec4(), psi.rep},
            u4{smp.vec4(), psi.rep};
        const auto& B = gamma_basis(psi.rep);
        for (const auto& M : B.elements)
            for (const auto& N : B.elements) {
                const auto c = rearrangement(M, N, u1, u2, u3, u4);
                worst = std::max(worst, c.residual());
                scale = std::max(scale, std::abs(c.lhs));
            }
    }
    r.body["rearrangement"] = {{"quadruples", quadruples},
                               {"pairs_per_quadruple", 256},
                               {"max_residual", worst},
                               {"max_abs_lhs", scale},
                               {"threshold", s.tol.threshold(scale)}};
    r.require(worst <= s.tol.threshold(scale), "rearrangement residual above threshold");
    return r;
}

Report cmd_takahashi(const std::string& file, std::optional<int> probe, const Settings& s) {
    Report r;
    r.command = "takahashi";
    const Spinor psi = parse_spinor(read_json_file(file), file);
    const Bilinears b = bilinears(psi);
    const Matrix4 Z = aggregate(b);
    std::optional<Vector4c> eta;
    if (probe) {
        if (*probe < 0 || *probe > 3) throw UsageError("--probe must be 0..3");
        eta = Vector4c::Unit(*probe);
    }
    const TakahashiResult t = takahashi_reconstruct(Z, psi.rep, eta);
    const double err = phase_aligned_error(psi, t.psi);
    const double thr = s.tol.threshold(psi.c.cwiseAbs().maxCoeff());
    const BoomerangReport bo = is_boomerang(Z, psi.rep, s.tol);
    r.body["input"] = jspinor(psi);
    r.body["reconstructed"] = jspinor(t.psi);
    r.body["probe_index"] = t.probe_index;
    r.body["N2"] = jc(t.N2);
    r.body["phase_aligned_error"] = err;
    r.body["threshold"] = thr;
    r.body["boomerang"] = {{"is_boomerang", bo.is_boomerang},
                           {"self_adjoint_residual", bo.self_adjoint_residual},
                           {"closure_residual", bo.closure_residual}};
    r.require(err <= thr, "reconstruction differs from input beyond a phase");
    r.require(bo.is_boomerang, "aggregate is not a boomerang");
    return r;
}

Report cmd_elko(const std::string& kind_s, const std::string& hel_s, double m, const std::string& p_s,
                const Settings& s) {
    Report r;
    r.command = "elko";
    ElkoKind kind;
    if (kind_s == "S" || kind_s == "s") kind = ElkoKind::S;
    else if (kind_s == "A" || kind_s == "a") kind = ElkoKind::A;
    else throw UsageError("--kind must be S or A");
    Helicity h;
    if (hel_s == "+" || hel_s == "plus") h = Helicity::Plus;
    else if (hel_s == "-" || hel_s == "minus") h = Helicity::Minus;
    else throw UsageError("--helicity must be + or -");
    if (!(m > 0)) throw UsageError("--m must be positive");
    const Vec3 p = parse_vec3_arg(p_s, "--p");

    const Spinor lam = elko(kind, h, m, p);
    const Angles ang = direction_angles(p);
    const Vector4c closed = elko_closed_form_factor(kind, h, m, norm3(p)) * elko_rest(kind, h, m, ang).c;
    const double closed_err = (lam.c - closed).cwiseAbs().maxCoeff();
    const auto mu = conjugation_eigenvalue(lam);
    const double expected = kind == ElkoKind::S ? 1.0 : -1.0;
    const ElkoActionResiduals act = elko_dirac_action(m, p);
    const double flip = helicity_flip_residual(h, m, ang);
    const double lam_scale = lam.c.cwiseAbs().maxCoeff();
    const double E = on_shell_energy(m, p);

    r.body["kind"] = kind == ElkoKind::S ? "S" : "A";
    r.body["helicity"] = h == Helicity::Plus ? "+" : "-";
    r.body["m"] = m;
    r.body["p"] = json::array({p[0], p[1], p[2]});
    r.body["energy"] = E;
    r.body["spinor"] = jspinor(lam);
    r.body["classification"] = classification_json(classify(lam, s.tol));
    r.body["conjugation_eigenvalue"] = mu ? jc(*mu) : json(nullptr);
    r.body["closed_form_error"] = closed_err;
    r.body["dirac_action_residuals"] = {
        {"S+", act.s_plus}, {"S-", act.s_minus}, {"A-", act.a_minus}, {"A+", act.a_plus}};
    r.body["helicity_flip_residual"] = flip;
    r.require(mu.has_value() && std::abs(*mu - expected) <= s.tol.threshold(1.0), "conjugation eigenvalue");
    r.require(closed_err <= s.tol.threshold(lam_scale), "boost differs from closed form");
    r.require(act.worst() <= s.tol.threshold((E + m) * lam_scale), "dirac-operator action residual");
    r.require(flip <= s.tol.threshold(std::sqrt(m)), "helicity flip");
    return r;
}

Vec4 b_vector(double b0, const std::string& bvec) {
    const Vec3 bv = bvec.empty() ? Vec3{} : parse_vec3_arg(bvec, "--bvec");
    return {b0, bv[0], bv[1], bv[2]};
}

json lv_convention() { return "operator p/ - b/ g5 - m with b^mu contravariant; LV gamma5 = -i g^0 g^1 g^2 g^3"; }

Report cmd_lv_dispersion(const std::string& p_s, double b0, const std::string& bvec, double m, const Settings& s) {
    Report r;
    r.command = "lv-dispersion";
    r.default_format = "csv";
    if (m < 0) throw UsageError("--m must be non-negative");
    const Vec3 p = parse_vec3_arg(p_s, "--p");
    const Vec4 b = b_vector(b0, bvec);
    const DispersionResult d = lv_dispersion(p, b, m);
    const auto ev = hamiltonian_eigenvalues(p, b, m);
    std::vector<cplx> roots(d.roots.roots.begin(), d.roots.roots.end());
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx c) { return a.real() < c.real() || (a.real() == c.real() && a.imag() < c.imag()); });

    const bool timelike = b[1] == 0 && b[2] == 0 && b[3] == 0;
    std::vector<double> closed;
    if (timelike) {
        const double pm = norm3(p);
        closed = {timelike_energy_u(1, pm, b0, m), timelike_energy_u(2, pm, b0, m), -timelike_energy_v(1, pm, b0, m),
                  -timelike_energy_v(2, pm, b0, m)};
        std::sort(closed.begin(), closed.end());
    }
    double scale = 1.0;
    for (double e : ev) scale = std::max(scale, std::abs(e));
    const double thr = s.tol.threshold(scale);

    Table t;
    t.columns = {"branch", "p0_re", "p0_im", "hamiltonian", "abs_diff", "closed_form", "closed_diff"};
    double worst_h = 0, worst_c = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double dh = std::abs(roots[i] - cplx(ev[i], 0));
        worst_h = std::max(worst_h, dh);
        json cf = nullptr, cd = nullptr;
        if (timelike) {
            const double dc = std::abs(roots[i] - cplx(closed[i], 0));
            worst_c = std::max(worst_c, dc);
            cf = closed[i];
            cd = dc;
        }
        t.rows.push_back(json::array({i, roots[i].real(), roots[i].imag(), ev[i], dh, cf, cd}));
    }
    r.table = t;
    r.body["p"] = json::array({p[0], p[1], p[2]});
    r.body["b_up"] = jvec(b);
    r.body["m"] = m;
    r.body["lv_convention"] = lv_convention();
    r.body["biquadratic"] = d.roots.biquadratic;
    r.body["max_imag"] = d.max_imag;
    r.body["max_diff_hamiltonian"] = worst_h;
    r.body["max_diff_closed_form"] = timelike ? json(worst_c) : json(nullptr);
    r.body["threshold"] = thr;
    r.require(worst_h <= thr, "quartic roots differ from hamiltonian eigenvalues");
    if (timelike) r.require(worst_c <= thr, "quartic roots differ from timelike closed form");
    return r;
}

Report cmd_lv_spinors(const std::string& p_s, double b0, const std::string& bvec, double m, const Settings& s) {
    Report r;
    r.command = "lv-spinors";
    if (!(m > 0)) throw UsageError("--m must be positive");
    const Vec3 p = parse_vec3_arg(p_s, "--p");
    const Vec4 b = b_vector(b0, bvec);
    r.body["p"] = json::array({p[0], p[1], p[2]});
    r.body["b_up"] = jvec(b);
    r.body["m"] = m;
    r.body["lv_convention"] = lv_convention();
    json us = json::array(), vs = json::array();
    for (int alpha = 1; alpha <= 2; ++alpha) {
        const LVSpinor u = lv_spinor_u(alpha, p, b, m);
        const LVSpinor v = lv_spinor_v(alpha, p, b, m);
        const double ru = u_equation_residual(u, p, b, m), rv = v_equation_residual(v, p, b, m);
        const double nu = sandwich(u.spinor, identity4(), u.spinor).real();
        const double nv = sandwich(v.spinor, identity4(), v.spinor).real();
        const double su = (u.energy + norm3(p) + std::abs(b0) + m) * u.spinor.c.cwiseAbs().maxCoeff();
        const double sv = (v.energy + norm3(p) + std::abs(b0) + m) * v.spinor.c.cwiseAbs().maxCoeff();
        us.push_back({{"alpha", alpha}, {"energy", u.energy}, {"helicity", u.helicity},
                      {"helicity_fallback", u.helicity_fallback}, {"spinor", jspinor(u.spinor)},
                      {"equation_residual", ru}, {"ubar_u", nu}});
        vs.push_back({{"alpha", alpha}, {"energy", v.energy}, {"helicity", v.helicity},
                      {"helicity_fallback", v.helicity_fallback}, {"spinor", jspinor(v.spinor)},
                      {"equation_residual", rv}, {"vbar_v", nv}});
        r.require(ru <= s.tol.threshold(su), "u equation residual (alpha=" + std::to_string(alpha) + ")");
        r.require(rv <= s.tol.threshold(sv), "v equation residual (alpha=" + std::to_string(alpha) + ")");
        r.require(std::abs(nu - 1) <= s.tol.threshold(1.0), "ubar u != 1");
        r.require(std::abs(nv + 1) <= s.tol.threshold(1.0), "vbar v != -1");
    }
    r.body["u"] = us;
    r.body["v"] = vs;
    return r;
}

Report cmd_lv_propagator(double p0, const std::string& p_s, double b0, const std::string& bvec, double m,
                         double pole_eps, const Settings& s) {
    Report r;
    r.command = "lv-propagator";
    const Vec3 p = parse_vec3_arg(p_s, "--p");
    const Vec4 b = b_vector(b0, bvec);
    const Vec4 pu{p0, p[0], p[1], p[2]};
    PropagatorResult pr;
    try {
        pr = lv_propagator(pu, b, m, pole_eps);
    } catch (const PoleProximity& e) {
        throw UsageError(e.what());
    }
    const double comm = commutator_square_residual(pu, b);
    const auto d = lv_dispersion(p, b, m);
    double scale = m * m;
    for (int i = 0; i < 4; ++i) scale += pu[i] * pu[i] + b[i] * b[i];
    scale *= scale;
    json poles = json::array();
    double worst_pole = 0;
    for (double root : d.real) {
        const double q = dispersion_value({root, p[0], p[1], p[2]}, b, m);
        worst_pole = std::max(worst_pole, std::abs(q) / scale);
        poles.push_back({{"p0", root}, {"denominator", q}});
    }
    r.body["p_up"] = jvec(pu);
    r.body["b_up"] = jvec(b);
    r.body["m"] = m;
    r.body["lv_convention"] = lv_convention();
    r.body["propagator"] = jmatrix(pr.direct);
    r.body["denominator"] = pr.quartic;
    r.body["identity_residual"] = pr.residual;
    r.body["commutator_square_residual"] = comm;
    r.body["poles"] = poles;
    r.body["max_relative_denominator_at_poles"] = worst_pole;
    r.require(pr.residual <= s.tol.threshold(1.0), "propagator defining identity");
    r.require(comm <= s.tol.threshold(scale), "([p/,b/]g5)^2 identity");
    r.require(worst_pole <= s.tol.threshold(1.0), "denominator does not vanish at dispersion roots");
    return r;
}

Coeffs16 parse_v(const json& j) {
    Coeffs16 v{};
    if (j.is_array()) {
        if (j.size() != 16) throw UsageError("v: expected 16 complex coefficients");
        for (std::size_t i = 0; i < 16; ++i) v[i] = parse_cplx(j[i], "v");
        return v;
    }
    if (!j.is_object()) throw UsageError("v: expected an array of 16 or an object keyed by basis label");
    const auto& labels = gamma_basis(Representation::Dirac).labels;
    for (const auto& [k, val] : j.items()) {
        const auto it = std::find(labels.begin(), labels.end(), k);
        if (it == labels.end()) throw UsageError("v: unknown basis label " + k);
        v[static_cast<std::size_t>(it - labels.begin())] = parse_cplx(val, "v." + k);
    }
    return v;
}

json v_json(const Coeffs16& v, Representation rep) {
    json o = json::object();
    const auto& labels = gamma_basis(rep).labels;
    for (std::size_t i = 0; i < 16; ++i)
        if (v[i] != cplx{}) o[labels[i]] = jc(v[i]);
    return o;
}

json omega_json(const OmegaSet& o) {
    return {{"sigma", o.sigma}, {"omega", o.omega}, {"J_lower", jvec(o.J)}, {"K_lower", jvec(o.K)},
            {"S_lower", jmat(o.S)}};
}

Report cmd_redefine(const std::string& kind, const std::string& file, const Settings& s) {
    Report r;
    r.command = "redefine";
    const json P = read_json_file(file);
    if (!P.is_object() || !P.contains("spinor")) throw UsageError(file + ": needs a spinor object");
    const Spinor chi = parse_spinor(P.at("spinor"));
    r.body["kind"] = kind;
    if (kind == "general") {
        PlaneWave w{chi, vec4_or(P, "p"), vec4_or(P, "x")};
        RedefParams k;
        if (P.contains("v")) k.v = parse_v(P.at("v"));
        if (P.contains("theta")) k.theta = parse_cplx(P.at("theta"), "theta");
        k.C_tilde = vec4_or(P, "C_tilde");
        k.C = mat4_or(P, "C");
        k.B = vec4_or(P, "B");
        k.B_tilde = vec4_or(P, "B_tilde");
        const RedefResult x = redefine(w, k);
        const Classification cc = classify(x.chi_b, s.tol), cp = classify(x.psi_b, s.tol);
        const cplx lh = omega_longhand(w, k, gamma(0, chi.rep));
        r.body["chi"] = jspinor(x.chi);
        r.body["psi"] = jspinor(x.psi);
        r.body["delta"] = x.delta;
        r.body["phase_rescaling"] = phase_rescaling(k, w.x_up);
        r.body["chi_classification"] = classification_json(cc);
        r.body["psi_classification"] = classification_json(cp);
        r.body["chi_bilinears"] = bilinears_json(x.chi_b);
        r.body["psi_bilinears"] = bilinears_json(x.psi_b);
        r.body["Omega"] = omega_json(x.omega);
        r.body["Omega_sigma_longhand"] = jc(lh);
        r.body["Omega_sigma_longhand_diff"] = std::abs(x.omega.sigma - lh);
        const double scale = std::max(x.psi_b.scale(), std::abs(x.delta) * x.chi_b.scale());
        const double nz = s.tol.threshold(scale);
        const bool applicable =
            std::abs(x.delta) >= nz && std::abs(x.omega.sigma) >= nz && std::abs(x.omega.omega) >= nz;
        json mapping;
        mapping["applicable"] = applicable;
        if (applicable && cp.ok()) {
            const auto adm = admissible_chi_classes(cp.id());
            const bool sing_ok = !cp.singular() || cc.regular();
            const bool adm_ok = std::find(adm.begin(), adm.end(), cc.id()) != adm.end();
            mapping["psi_singular_implies_chi_regular"] = sing_ok;
            mapping["chi_class_admissible"] = adm_ok;
            r.require(sing_ok, "singular psi from non-regular chi");
            r.require(adm_ok, "chi class not admissible for the psi class");
        }
        r.body["mapping"] = mapping;
        return r;
    }
    if (kind == "majorana") {
        std::optional<cplx> delta;
        try {
            delta = P.contains("delta") ? std::optional<cplx>(parse_cplx(P.at("delta"), "delta")) : majorana_delta(chi);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!delta) throw UsageError("chi admits no delta with i a3*/a3 = -i a1*/a1");
        MajoranaMap mm;
        try {
            mm = map_dirac_to_majorana(chi, *delta);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const Classification c = classify(mm.psi, s.tol);
        const auto mu = conjugation_eigenvalue(mm.psi);
        r.body["chi"] = jspinor(chi);
        r.body["delta"] = jc(*delta);
        r.body["v"] = v_json(mm.params.v, Representation::Weyl);
        r.body["psi"] = jspinor(mm.psi);
        r.body["psi_classification"] = classification_json(c);
        r.body["conjugation_eigenvalue"] = mu ? jc(*mu) : json(nullptr);
        r.body["consistency_residual"] = mm.consistency_residual;
        r.require(c.id() == 5, "output is not a flagpole");
        r.require(mu && std::abs(*mu - 1.0) <= s.tol.threshold(1.0), "output is not C-self-conjugate");
        return r;
    }
    if (kind == "flagdipole") {
        const double b1 = num_or(P, "beta1", 1.0), b2 = num_or(P, "beta2", 1.0);
        const Classification cin = classify(chi, s.tol);
        if (!cin.regular()) throw UsageError("flag-dipole map needs a regular chi (classes 1-3)");
        FlagDipoleMap fm;
        try {
            fm = map_regular_to_flagdipole(chi, b1, b2, s.tol);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        r.body["chi"] = jspinor(chi);
        r.body["chi_classification"] = classification_json(cin);
        r.body["beta1"] = b1;
        r.body["beta2"] = b2;
        r.body["lambda"] = fm.lambda;
        r.body["psi"] = jspinor(fm.psi);
        r.body["psi_classification"] = classification_json(fm.cls);
        r.body["type4_constraint_residual"] = fm.constraint_residual;
        r.body["moduli_differ"] = fm.moduli_differ;
        r.body["reached_flag_dipole"] = fm.reached;
        return r;
    }
    throw UsageError("--kind must be general, majorana or flagdipole");
}

Report cmd_class_map(std::size_t samples, const std::string& dist_s, const Settings& s) {
    Report r;
    r.command = "class-map";
    r.default_format = "csv";
    MapDistribution dist;
    if (dist_s == "mixed") dist = MapDistribution::Mixed;
    else if (dist_s == "zero") dist = MapDistribution::Zero;
    else throw UsageError("--distribution must be mixed or zero");
    const ClassMapReport rep = class_map_experiment(samples, s.seed, dist, s.tol);
    // zero redefinitions never pass the Delta, Omega != 0 filter; show every draw instead
    const auto& shown = dist == MapDistribution::Zero ? rep.table_all : rep.table;
    Table t;
    t.columns = {"psi_class", "chi_outside", "chi_1", "chi_2", "chi_3", "chi_4", "chi_5", "chi_6"};
    for (std::size_t i = 0; i < 7; ++i) {
        json row = json::array({i == 0 ? json("outside") : json(i)});
        for (std::size_t j = 0; j < 7; ++j) row.push_back(shown[i][j]);
        t.rows.push_back(row);
    }
    r.table = t;
    auto samples_json = [](const std::vector<ClassMapSample>& v) {
        json a = json::array();
        for (const auto& x : v)
            a.push_back({{"index", x.index}, {"chi_class", x.chi_class}, {"psi_class", x.psi_class},
                         {"delta", x.delta}, {"Omega_sigma", x.omega_sigma}, {"Omega_omega", x.omega_omega}});
        return a;
    };
    r.body["distribution"] = dist_s;
    r.body["requested"] = rep.requested;
    r.body["drawn"] = rep.drawn;
    r.body["checked"] = rep.checked;
    r.body["table_all_draws"] = rep.table_all;
    r.body["counterexamples"] = samples_json(rep.counterexamples);
    r.body["table_violations"] = samples_json(rep.table_violations);
    r.require(rep.counterexamples.empty(), "singular psi paired with non-regular chi");
    r.require(rep.table_violations.empty(), "inadmissible (psi, chi) class pair");
    if (dist == MapDistribution::Mixed) r.require(rep.checked == samples, "too few samples with Delta, Omega != 0");
    else {
        bool diag = true;
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (i != j && rep.table_all[i][j] != 0) diag = false;
        r.require(diag, "zero redefinition changed a class");
    }
    return r;
}

Report cmd_torsion(const std::string& file, const Settings& s) {
    Report r;
    r.command = "torsion-couplings";
    r.default_format = "csv";
    const json P = read_json_file(file);
    if (!P.is_object() || !P.contains("spinor") || !P.contains("T"))
        throw UsageError(file + ": needs T and spinor");
    Torsion T;
    try {
        T = Torsion::from_mixed(tensor_or<3>(P, "T"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Spinor psi = parse_spinor(P.at("spinor"));
    const Bilinears B = bilinears(psi);
    const json cj = P.value("couplings", json::object());
    LICouplings li{num_or(cj, "a", 0), num_or(cj, "a5", 0), num_or(cj, "b", 0), num_or(cj, "b5", 0)};
    Dim45Couplings d45;
    d45.a1 = num_or(cj, "a1", 0);
    d45.a2 = num_or(cj, "a2", 0);
    d45.a3 = num_or(cj, "a3", 0);
    d45.a4 = num_or(cj, "a4", 0);
    if (cj.contains("ahat")) {
        const json& a = cj.at("ahat");
        if (!a.is_array() || a.size() != 9) throw UsageError("couplings.ahat: expected 9 numbers (ahat1..ahat9)");
        for (std::size_t i = 0; i < 9; ++i) d45.ahat[i + 1] = num(a[i], "ahat");
    }
    const Mat4r h = mat4_or(P, "h");
    LVTorsionCouplings lv = LVTorsionCouplings::from_h(h);
    if (P.contains("k_sigma")) lv.k_sigma = tensor_or<3>(P, "k_sigma");
    if (P.contains("k5_omega")) lv.k5_omega = tensor_or<3>(P, "k5_omega");
    if (P.contains("k_S")) lv.k_S = tensor_or<5>(P, "k_S");
    const Vec4 p = vec4_or(P, "p");

    const CouplingReport rli = lagrangian_LI(T, B, li, s.tol);
    const CouplingReport rlv = lagrangian_LV(T, B, lv, s.tol);
    const CouplingReport r45 = lagrangian_dim45(T, B, p, d45, s.tol);

    Table t;
    t.columns = {"lagrangian", "term", "contracts", "value", "vanishes_by_class", "within_threshold"};
    auto add = [&](const std::string& name, const CouplingReport& cr) {
        const double thr = s.tol.threshold(cr.scale);
        for (const auto& term : cr.terms) {
            const bool ok = !term.vanishes_by_class || std::abs(term.value) <= thr;
            t.rows.push_back(json::array({name, term.name, to_string(term.contracts), term.value,
                                          term.vanishes_by_class, ok}));
            r.require(ok, name + ": " + term.name + " should vanish for this class");
        }
    };
    add("LI", rli);
    add("LV", rlv);
    add("dim45", r45);
    r.table = t;

    const TorsionParts parts = derived_torsion_parts(T);
    const EffectiveCoeffs eff = effective_coeffs(mat4_or(P, "c"), h, mat4_or(P, "chi"), vec4_or(P, "b"), T);
    const double red = flagpole_reduction(T, B, d45.a1, d45.a3);
    const double d4 = dim4_sum(r45);
    r.body["classification"] = classification_json(rli.cls);
    r.body["trace_lower"] = jvec(parts.trace);
    r.body["axial_upper"] = jvec(parts.axial);
    r.body["c_eff"] = jmat(eff.c_eff);
    r.body["b_eff_lower"] = jvec(eff.b_eff);
    r.body["dim4_sum"] = d4;
    r.body["flagpole_reduction"] = red;
    if (rli.cls.id() == 5) {
        const double diff = std::abs(d4 - red);
        r.body["reduction_residual"] = diff;
        r.require(diff <= s.tol.threshold(r45.scale), "dimension-4 sum differs from the flagpole reduction");
    }
    return r;
}

Report cmd_cosmo(const std::string& file, std::optional<double> t0o, std::optional<double> t1o, std::size_t samples,
                 const Settings& s) {
    Report r;
    r.command = "cosmo-verify";
    r.default_format = "csv";
    const json J = read_json_file(file);
    if (!J.is_object()) throw UsageError(file + ": expected an object");
    CosmoParams P = CosmoParams::constrained(num_or(J, "m", 1.0), num_or(J, "C", 1.0), num_or(J, "K", 2.0),
                                             num_or(J, "beta", 0.0));
    if (J.contains("b")) {
        P.b = num(J.at("b"), "b");
        if (std::abs(P.constraint_residual()) > 1e-10)
            throw UsageError("3 m^2 (beta^2 - b) = 1 violated (residual " + std::to_string(P.constraint_residual()) + ")");
    }
    P.delta_alpha = num_or(J, "delta_alpha", 0.0);
    P.varsigma = num_or(J, "varsigma", 0.0);
    P.xi = num_or(J, "xi", 0.0);
    if (samples < 2) throw UsageError("--samples must be at least 2");
    std::optional<UnperturbedSolution> sol;
    try {
        sol.emplace(P);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const UnperturbedSolution& S = *sol;
    const double q = P.q();
    const double t0 = t0o.value_or(S.t_min(q));
    const double t1 = t1o.value_or(t0 + 9.0 * std::max(std::abs(t0), q));
    if (!(t1 > t0)) throw UsageError("need t1 > t0");
    if (!S.admissible(t0)) throw UsageError("t0 outside the admissible window (t + beta > sqrt(beta^2 - b))");

    Table t;
    t.columns = {"t", "tau", "a", "c", "tau_ode_residual", "dirac_residual", "dirac_threshold", "einstein_residual",
                 "einstein_threshold", "J0_tau", "K3_tau", "sigma_tau", "omega", "class", "class_name"};
    double worst_d = 0, worst_e = 0, worst_ode = 0;
    std::vector<double> times;
    for (std::size_t i = 0; i < samples; ++i) {
        const double tt = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(samples - 1);
        times.push_back(tt);
        const Spinor psi = S.psi(tt);
        const Vector4c dp = S.dpsi(tt);
        const double tau = S.tau(tt);
        const double rd = S.dirac_residual_at(tt).cwiseAbs().maxCoeff();
        const double dscale = std::max({dp.cwiseAbs().maxCoeff(), P.m * psi.c.cwiseAbs().maxCoeff(),
                                        std::abs(S.dtau(tt) / tau) * psi.c.cwiseAbs().maxCoeff()});
        const double dthr = s.tol.threshold(dscale);
        const EinsteinInputs in = S.einstein_inputs(tt);
        double escale = std::max(std::abs(in.rho), std::abs(in.KK));
        for (int k = 0; k < 3; ++k)
            escale = std::max({escale, std::pow(in.f.da[k] / in.f.a[k], 2), std::abs(in.f.dda[k] / in.f.a[k])});
        const double ethr = s.tol.threshold(escale);
        double re = 0;
        for (double x : einstein_residuals(in)) re = std::max(re, std::abs(x));
        const double ode = std::abs(S.tau_ode_residual(tt));
        const Bilinears b = bilinears(psi);
        const Classification c = classify(b, s.tol);
        r.require(rd <= dthr, "dirac residual at t=" + json(tt).dump());
        r.require(re <= ethr, "einstein residual at t=" + json(tt).dump());
        worst_d = std::max(worst_d, rd);
        worst_e = std::max(worst_e, re);
        worst_ode = std::max(worst_ode, ode);
        t.rows.push_back(json::array({tt, tau, in.f.a[0], in.f.a[2], ode, rd, dthr, re, ethr, b.J[0] * tau,
                                      b.K_up()[3] * tau, b.sigma * tau, b.omega, c.ok() ? json(c.id()) : json(nullptr),
                                      class_name(c.id())}));
    }
    r.table = t;
    r.require(worst_ode == 0.0, "tau'' - 3mC/4 != 0");

    const ConservationRecord cr = conservation_check([&](double x) { return S.psi(x); },
                                                     [&](double x) { return S.tau(x); }, [](double) { return 1.0; },
                                                     P.m, t0, t1, samples);
    const double dthr = s.tol.threshold(1.0);
    r.require(cr.drift_J0tau <= dthr && cr.drift_K3tau <= dthr && cr.drift_sigmatau <= dthr, "conserved product drift");
    for (double x : cr.system_residual) r.require(x <= dthr, "coupled bilinear system residual");
    r.require(std::abs(cr.C - P.C) <= s.tol.threshold(P.C), "K^3 tau != C");
    r.require(std::abs(cr.D - P.K) <= s.tol.threshold(P.K), "J_0 tau != K");

    ExponentFit fit;
    try {
        fit = perturbed_exponent(P, times);
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("perturbed branch: ") + e.what());
    }
    r.require(std::abs(fit.slope - 2.0) <= 0.1, "perturbed residual exponent outside 2 +- 0.1");

    r.body["params"] = {{"m", P.m}, {"C", P.C}, {"K", P.K}, {"beta", P.beta}, {"b", P.b},
                        {"delta_alpha", P.delta_alpha}, {"varsigma", P.varsigma}, {"xi", P.xi}};
    r.body["window"] = {t0, t1};
    r.body["representation"] = "dirac";
    r.body["max_tau_ode_residual"] = worst_ode;
    r.body["max_dirac_residual"] = worst_d;
    r.body["max_einstein_residual"] = worst_e;
    r.body["matter_density"] = "rho = m sigma / 2, p = 0";
    r.body["conservation"] = {{"J0_tau", cr.D},
                              {"K3_tau", cr.C},
                              {"drift_J0_tau", cr.drift_J0tau},
                              {"drift_K3_tau", cr.drift_K3tau},
                              {"drift_sigma_tau", cr.drift_sigmatau},
                              {"max_omega", cr.max_omega},
                              {"max_K0", cr.max_K0},
                              {"max_K12", cr.max_K12},
                              {"system_residuals", cr.system_residual}};
    r.body["perturbed"] = {{"delta_alpha", fit.deltas}, {"max_ode_residual", fit.residuals}, {"exponent", fit.slope}};
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spinor bilinears, classification, Fierz, Elko, Lorentz-violating Dirac and torsion checks",
                 "spinorlab"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--tol-abs", s.tol.abs, "absolute tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--tol-rel", s.tol.rel, "relative tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", s.seed, "seed for randomized experiments");
    app.add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", s.out, "write the report to this file");

    std::vector<std::string> files;
    auto* c_classify = app.add_subcommand("classify", "classify spinors given as JSON files");
    c_classify->add_option("files", files, "spinor files")->required();

    std::string file;
    int quadruples = 1;
    auto* c_fierz = app.add_subcommand("fierz", "Fierz identities and rearrangement for one spinor");
    c_fierz->add_option("file", file, "spinor file")->required();
    c_fierz->add_option("--quadruples", quadruples, "random spinor quadruples for the rearrangement check")
        ->check(CLI::NonNegativeNumber);

    std::optional<int> probe;
    auto* c_tak = app.add_subcommand("takahashi", "reconstruct a spinor from its aggregate");
    c_tak->add_option("file", file, "spinor file")->required();
    c_tak->add_option("--probe", probe, "canonical probe index 0..3");

    std::string kind = "S", helicity = "+", p_s = "0,0,0", bvec;
    double m = 1.0, b0 = 0.0, p0 = 0.0, pole_eps = 1e-10;
    auto* c_elko = app.add_subcommand("elko", "Elko spinor and its verification report");
    c_elko->add_option("--kind", kind, "S or A");
    c_elko->add_option("--helicity", helicity, "+ or -");
    c_elko->add_option("--m", m, "mass");
    c_elko->add_option("--p", p_s, "momentum px,py,pz");

    auto* c_lvd = app.add_subcommand("lv-dispersion", "branches of the axial-vector dispersion relation");
    auto* c_lvs = app.add_subcommand("lv-spinors", "u and v spinors for a timelike axial vector");
    auto* c_lvp = app.add_subcommand("lv-propagator", "propagator with an axial background vector");
    for (auto* c : {c_lvd, c_lvs, c_lvp}) {
        c->add_option("--m", m, "mass");
        c->add_option("--p", p_s, "spatial momentum px,py,pz");
        c->add_option("--b0", b0, "b^0");
        c->add_option("--bvec", bvec, "b^1,b^2,b^3");
    }
    c_lvp->add_option("--p0", p0, "energy p^0");
    c_lvp->add_option("--pole-eps", pole_eps, "relative distance to the mass shell treated as a pole");

    std::string params;
    auto* c_red = app.add_subcommand("redefine", "field redefinition of a spinor");
    c_red->add_option("--kind", kind, "general, majorana or flagdipole")->required();
    c_red->add_option("--params", params, "parameter file")->required();

    std::size_t samples = 1000;
    std::string dist = "mixed";
    auto* c_cm = app.add_subcommand("class-map", "class-mapping experiment under random redefinitions");
    c_cm->add_option("--samples", samples, "number of checked samples");
    c_cm->add_option("--distribution", dist, "mixed or zero");

    auto* c_tor = app.add_subcommand("torsion-couplings", "per-term torsion couplings for a spinor");
    c_tor->add_option("--input", file, "coupling bundle")->required();

    std::optional<double> t0, t1;
    std::size_t csamples = 50;
    auto* c_cos = app.add_subcommand("cosmo-verify", "Bianchi-I solution residuals and drifts");
    c_cos->add_option("--params", params, "parameter file")->required();
    c_cos->add_option("--t0", t0, "window start");
    c_cos->add_option("--t1", t1, "window end");
    c_cos->add_option("--samples", csamples, "sample times");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }
    if (s.format.empty() && c_classify->parsed() && files.size() > 1) s.format = "csv";

    Report rep;
    try {
        if (c_classify->parsed()) rep = cmd_classify(files, s);
        else if (c_fierz->parsed()) rep = cmd_fierz(file, quadruples, s);
        else if (c_tak->parsed()) rep = cmd_takahashi(file, probe, s);
        else if (c_elko->parsed()) rep = cmd_elko(kind, helicity, m, p_s, s);
        else if (c_lvd->parsed()) rep = cmd_lv_dispersion(p_s, b0, bvec, m, s);
        else if (c_lvs->parsed()) rep = cmd_lv_spinors(p_s, b0, bvec, m, s);
        else if (c_lvp->parsed()) rep = cmd_lv_propagator(p0, p_s, b0, bvec, m, pole_eps, s);
        else if (c_red->parsed()) rep = cmd_redefine(kind, params, s);
        else if (c_cm->parsed()) rep = cmd_class_map(samples, dist, s);
        else if (c_tor->parsed()) rep = cmd_torsion(file, s);
        else if (c_cos->parsed()) rep = cmd_cosmo(params, t0, t1, csamples, s);
    } catch (const UsageError& e) {
        err << "input error: " << e.what() << "\n";
        return InputError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return InputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return InputError;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        err << "verification failure: " << e.what() << "\n";
        return VerificationFailure;
    }

    if (!s.out.empty()) {
        std::ofstream f(s.out);
        if (!f) {
            err << "input error: cannot write " << s.out << "\n";
            return InputError;
        }
        emit(rep, s, f);
    } else {
        emit(rep, s, out);
    }
    if (!rep.pass)
        for (const auto& f : rep.failures) err << "FAIL: " << f << "\n";
    return rep.pass ? Ok : VerificationFailure;
}

}  // namespace spinorlab::cli
