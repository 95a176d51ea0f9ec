#include "lieclass/report.hpp"

#include <sstream>

#include "lieclass/classify.hpp"
#include "lieclass/errors.hpp"

namespace lieclass {

ojson scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return s.rat().get_str();
    ojson j;
    j["rat"] = s.rat().get_str();
    j["ext"] = s.ext().get_str();
    j["d"] = s.d().get_si();
    return j;
}

Scalar scalar_from_json(const ojson& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_object()) {
        if (!j.contains("rat") || !j.contains("ext") || !j.contains("d"))
            throw malformed_input("extension scalar needs {\"rat\",\"ext\",\"d\"}");
        if (!j["d"].is_number_integer())
            throw malformed_input("discriminant d must be an integer");
        long d = j["d"].get<long>();
        if (d <= 1) throw malformed_input("discriminant d must be an integer > 1");
        Scalar rat = Scalar::parse(j["rat"].is_string() ? j["rat"].get<std::string>()
                                                        : j["rat"].dump());
        Scalar ext = Scalar::parse(j["ext"].is_string() ? j["ext"].get<std::string>()
                                                        : j["ext"].dump());
        mpz_class m, s;
        squarefree_decompose(mpz_class(d), m, s);
        if (s == 1) return rat + ext * Scalar(mpq_class(m)); // sqrt(d) is rational
        return Scalar(rat.rat(), (ext * Scalar(mpq_class(m))).rat(), s);
    }
    throw malformed_input("scalar must be a rational string or an extension object");
}

ojson mat2_to_json(const Mat2& m) {
    return ojson::array({ojson::array({scalar_to_json(m(0, 0)), scalar_to_json(m(0, 1))}),
                         ojson::array({scalar_to_json(m(1, 0)), scalar_to_json(m(1, 1))})});
}

ojson vec2_to_json(const Vec2& v) {
    return ojson::array({scalar_to_json(v.x), scalar_to_json(v.y)});
}

ojson exppoly_to_json(const ExpPoly& p) {
    ojson arr = ojson::array();
    for (const auto& t : p.terms()) {
        ojson term = ojson::array({scalar_to_json(t.c), t.k, scalar_to_json(t.mu)});
        if (!t.theta.is_zero()) term.push_back(scalar_to_json(t.theta));
        arr.push_back(term);
    }
    return arr;
}

ojson step_to_json(const TransformStep& s) {
    ojson j;
    if (const auto* lc = std::get_if<LinearChange>(&s)) {
        j["step"] = "linear_change";
        j["P"] = mat2_to_json(lc->P);
    } else if (const auto* es = std::get_if<ExpShift>(&s)) {
        j["step"] = "exp_shift";
        j["tau"] = scalar_to_json(es->tau);
    } else if (const auto* sx = std::get_if<ScaleX>(&s)) {
        j["step"] = "scale_x";
        j["sigma"] = scalar_to_json(sx->sigma);
    } else if (const auto* sh = std::get_if<ShiftX>(&s)) {
        j["step"] = "shift_x";
        j["x0"] = scalar_to_json(sh->x0);
    } else {
        const auto& ps = std::get<ParticularShift>(s);
        j["step"] = "particular_shift";
        ojson coeffs = ojson::array();
        for (const auto& c : ps.y_p.coeffs) coeffs.push_back(vec2_to_json(c));
        j["y_p"] = coeffs;
    }
    return j;
}

ojson chain_to_json(const TransformChain& c) {
    ojson arr = ojson::array();
    for (const auto& s : c) arr.push_back(step_to_json(s));
    return arr;
}

ojson vf_to_json(const VectorField& f) {
    ojson j;
    j["name"] = f.name;
    j["xi"] = exppoly_to_json(f.xi);
    j["M"] = ojson::array(
        {ojson::array({exppoly_to_json(f.M[0][0]), exppoly_to_json(f.M[0][1])}),
         ojson::array({exppoly_to_json(f.M[1][0]), exppoly_to_json(f.M[1][1])})});
    j["v"] = ojson::array({exppoly_to_json(f.v[0]), exppoly_to_json(f.v[1])});
    return j;
}

namespace {

ojson jordan_to_json(const JordanResult& jr) {
    ojson j;
    switch (jr.kind) {
    case JordanKind::J1: j["kind"] = "J1"; break;
    case JordanKind::J2: j["kind"] = "J2"; break;
    case JordanKind::J3: j["kind"] = "J3"; break;
    }
    j["J"] = mat2_to_json(jr.J);
    j["P"] = mat2_to_json(jr.P);
    return j;
}

ojson canonical_to_json(const ClassificationReport& r) {
    ojson j;
    if (const auto* com = std::get_if<Commuting>(&r.form)) {
        j["case"] = "COMMUTING";
        j["M"] = mat2_to_json(com->M);
        if (r.m_jordan) j["jordan_of_M"] = jordan_to_json(*r.m_jordan);
        else j["jordan_of_M"] = nullptr;
        j["note"] = "reduces to y'' = M y; sub-classification: see literature";
    } else if (const auto* j1 = std::get_if<CaseJ1>(&r.form)) {
        j["case"] = "J1";
        j["lambda"] = scalar_to_json(j1->lambda);
        auto [A, B] = canonical_pair(r.form);
        j["A"] = mat2_to_json(A);
        j["B"] = mat2_to_json(B);
        HPair h = h_values(j1->B, j1->lambda);
        j["h1"] = scalar_to_json(h.h1);
        j["h2"] = scalar_to_json(h.h2);
    } else {
        j["case"] = std::get_if<CaseJ2>(&r.form) ? "J2" : "J3";
        auto [A, B] = canonical_pair(r.form);
        j["A"] = mat2_to_json(A);
        j["B"] = mat2_to_json(B);
    }
    return j;
}

} // namespace

ojson report_to_json(const ClassificationReport& r) {
    ojson j;
    j["schema"] = 1;
    ojson in;
    in["A"] = mat2_to_json(r.input.A);
    in["B"] = mat2_to_json(r.input.B);
    in["f"] = vec2_to_json(r.input.f);
    if (r.input.ctx_d != 0) in["d"] = r.input.ctx_d.get_si();
    else in["d"] = nullptr;
    j["input"] = in;
    j["commuting"] = r.commuting;
    j["label"] = label_name(r.label);
    j["canonical"] = canonical_to_json(r);
    j["chain"] = chain_to_json(r.chain);
    j["inverse_chain"] = chain_to_json(inverse_chain(r.chain));
    ojson gens = ojson::array();
    for (const auto& g : r.generators_canonical) gens.push_back(vf_to_json(g));
    j["generators"] = gens;
    ojson orig = ojson::array();
    for (const auto& g : r.generators_original) orig.push_back(vf_to_json(g));
    j["generators_original"] = orig;

    ojson ver;
    ojson per = ojson::array();
    for (const auto& gv : r.verification) {
        ojson e;
        e["name"] = gv.name;
        e["symbolic"] = gv.symbolic;
        if (gv.numeric_residual) {
            e["numeric_residual"] = *gv.numeric_residual;
            e["epsilons"] = gv.epsilons;
        } else {
            e["numeric_residual"] = nullptr;
            e["epsilons"] = ojson::array();
        }
        per.push_back(e);
    }
    ver["generators"] = per;
    ver["numeric"] = r.numeric_verified;
    if (r.numeric_verified) {
        ver["tol"] = r.tol;
        ver["passed"] = r.numeric_passed;
    }
    j["verification"] = ver;
    return j;
}

namespace {

std::string eta_to_text(const VectorField& f, int i) {
    std::string out;
    auto add = [&](const ExpPoly& p, const std::string& var) {
        if (p.is_zero()) return;
        Scalar c;
        std::string piece;
        if (p.constant_value(&c) && c == Scalar(1) && !var.empty()) piece = var;
        else piece = "(" + p.str() + ")" + (var.empty() ? "" : "*" + var);
        if (!out.empty()) out += " + ";
        out += piece;
    };
    add(f.M[i][0], "y");
    add(f.M[i][1], "z");
    add(f.v[i], "");
    return out.empty() ? "0" : out;
}

} // namespace

std::string vf_to_text(const VectorField& f) {
    std::vector<std::string> pieces;
    if (!f.xi.is_zero()) {
        Scalar c;
        if (f.xi.constant_value(&c) && c == Scalar(1)) pieces.push_back("d/dx");
        else pieces.push_back("(" + f.xi.str() + ") d/dx");
    }
    auto wrap = [](const std::string& s) {
        return s.find(" + ") == std::string::npos ? s : "(" + s + ")";
    };
    std::string e1 = eta_to_text(f, 0);
    std::string e2 = eta_to_text(f, 1);
    if (e1 != "0") pieces.push_back(wrap(e1) + " d/dy");
    if (e2 != "0") pieces.push_back(wrap(e2) + " d/dz");
    if (pieces.empty()) return "0";
    std::string out = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) out += " + " + pieces[i];
    return out;
}

std::string report_to_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "system: y'' = A y' + B y + f\n";
    os << "  A = " << r.input.A.str() << "\n";
    os << "  B = " << r.input.B.str() << "\n";
    os << "  f = [" << r.input.f.x << ", " << r.input.f.y << "]\n";
    os << "commuting: " << (r.commuting ? "yes" : "no") << "\n";
    os << "label: " << label_name(r.label) << "\n";
    if (const auto* com = std::get_if<Commuting>(&r.form)) {
        os << "canonical: y'' = M y with M = " << com->M.str() << "\n";
        if (r.m_jordan) {
            os << "  Jordan form of M: " << r.m_jordan->J.str() << "  (P = "
               << r.m_jordan->P.str() << ")\n";
        }
        os << "  sub-classification of the commuting case: see literature\n";
    } else if (const auto* j1 = std::get_if<CaseJ1>(&r.form)) {
        auto [A, B] = canonical_pair(r.form);
        HPair h = h_values(j1->B, j1->lambda);
        os << "canonical: case J1, lambda = " << j1->lambda << "\n";
        os << "  A = " << A.str() << "\n";
        os << "  B = " << B.str() << "\n";
        os << "  h1 = " << h.h1 << ", h2 = " << h.h2 << "\n";
        bool cond = j1->B(1, 0).is_zero() && h.h2.is_zero();
        os << "  extension form (b21 = 0 and b11 = b22 + 4*lambda^2): "
           << (cond ? "satisfied" : "not satisfied") << "\n";
    } else {
        auto [A, B] = canonical_pair(r.form);
        os << "canonical: case " << (std::get_if<CaseJ2>(&r.form) ? "J2" : "J3") << "\n";
        os << "  A = " << A.str() << "\n";
        os << "  B = " << B.str() << "\n";
    }
    os << "chain (input -> canonical):\n";
    if (r.chain.empty()) os << "  (none)\n";
    for (const auto& s : r.chain) {
        if (const auto* lc = std::get_if<LinearChange>(&s))
            os << "  linear change, P = " << lc->P.str() << "\n";
        else if (const auto* es = std::get_if<ExpShift>(&s))
            os << "  exponential shift, tau = " << es->tau << "\n";
        else if (const auto* sx = std::get_if<ScaleX>(&s))
            os << "  x-scaling, sigma = " << sx->sigma << "\n";
        else if (const auto* sh = std::get_if<ShiftX>(&s))
            os << "  x-shift, x0 = " << sh->x0 << "\n";
        else {
            const auto& ps = std::get<ParticularShift>(s);
            os << "  particular-solution shift, y_p coefficients:";
            for (const auto& c : ps.y_p.coeffs)
                os << " [" << c.x << ", " << c.y << "]";
            os << "\n";
        }
    }
    os << "generators (canonical coordinates):\n";
    for (const auto& g : r.generators_canonical)
        os << "  " << g.name << " = " << vf_to_text(g) << "\n";
    os << "generators (original coordinates):\n";
    for (const auto& g : r.generators_original)
        os << "  " << g.name << " = " << vf_to_text(g) << "\n";
    os << "verification:\n";
    for (const auto& gv : r.verification) {
        os << "  " << gv.name << ": symbolic " << gv.symbolic;
        if (gv.numeric_residual)
            os << ", max flow residual " << *gv.numeric_residual;
        os << "\n";
    }
    if (r.numeric_verified)
        os << "numeric verification " << (r.numeric_passed ? "passed" : "FAILED")
           << " at tol " << r.tol << "\n";
    return os.str();
}

} // namespace lieclass
