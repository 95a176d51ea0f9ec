#include "lieclass/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lieclass/canonical.hpp"
#include "lieclass/classify.hpp"
#include "lieclass/errors.hpp"
#include "lieclass/flow.hpp"
#include "lieclass/prolong.hpp"
#include "lieclass/reduction.hpp"

namespace lieclass {

namespace {

// Portable uniform in [-1, 1): mt19937_64 output is standardized, the
// distribution adapters are not.
double symmetric_unit(std::mt19937_64& gen) {
    return double(gen() >> 11) * (1.0 / 4503599627370496.0) - 1.0;
}

mpz_class merge_ctx(const mpz_class& a, const mpz_class& b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw conflicting_discriminant("entries use sqrt(" + a.get_str() + ") and sqrt(" +
                                   b.get_str() + ")");
}

void scan_scalar(const Scalar& s, mpz_class& ctx) { ctx = merge_ctx(ctx, s.d()); }

Mat2 parse_mat(const ojson& j, const std::string& name) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        throw malformed_input("\"" + name + "\" must be a 2x2 array");
    Mat2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = scalar_from_json(j[r][c]);
    return m;
}

} // namespace

SystemSpec parse_input(const ojson& doc) {
    if (!doc.is_object()) throw malformed_input("system document must be a JSON object");
    if (!doc.contains("A") || !doc.contains("B"))
        throw malformed_input("system document needs \"A\" and \"B\"");
    SystemSpec spec;
    spec.A = parse_mat(doc["A"], "A");
    spec.B = parse_mat(doc["B"], "B");
    if (doc.contains("f") && !doc["f"].is_null()) {
        const auto& f = doc["f"];
        if (!f.is_array() || f.size() != 2)
            throw malformed_input("\"f\" must be a 2-vector");
        spec.f = Vec2(scalar_from_json(f[0]), scalar_from_json(f[1]));
    }
    mpz_class ctx = 0;
    if (doc.contains("d") && !doc["d"].is_null()) {
        if (!doc["d"].is_number_integer())
            throw malformed_input("\"d\" must be an integer");
        long d = doc["d"].get<long>();
        if (d <= 1) throw malformed_input("\"d\" must be a non-square integer > 1");
        mpz_class m, s;
        squarefree_decompose(mpz_class(d), m, s);
        if (s == 1) throw malformed_input("\"d\" must not be a perfect square");
        ctx = s;
    }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            scan_scalar(spec.A(r, c), ctx);
            scan_scalar(spec.B(r, c), ctx);
        }
    scan_scalar(spec.f.x, ctx);
    scan_scalar(spec.f.y, ctx);
    spec.ctx_d = ctx;
    return spec;
}

ClassificationReport run_report(const SystemSpec& spec, const RunConfig& cfg) {
    ClassificationReport rep;
    rep.input = spec;
    rep.tol = cfg.tol;

    HomogenizeResult hom = homogenize(spec);
    rep.commuting = commute_test(hom.A, hom.B);

    CanonicalizeResult canon = canonicalize(hom.A, hom.B, cfg.normalize_lambda, spec.ctx_d);
    Classification cls = classify_canonical(canon.form);
    rep.label = cls.label;
    rep.form = cls.form;

    rep.chain = hom.chain;
    rep.chain.insert(rep.chain.end(), canon.chain.begin(), canon.chain.end());
    rep.chain.insert(rep.chain.end(), cls.orientation_steps.begin(),
                     cls.orientation_steps.end());

    rep.generators_canonical = cls.generators;
    for (const auto& g : cls.generators)
        rep.generators_original.push_back(pullback_vf(rep.chain, g));

    Mat2 Ac = hom.A, Bc = hom.B;
    if (!rep.commuting) std::tie(Ac, Bc) = canonical_pair(cls.form);

    if (rep.commuting) {
        rep.m_jordan_attempted = true;
        try {
            rep.m_jordan = real_jordan(std::get<Commuting>(cls.form).M, spec.ctx_d);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnsupportedDiscriminant) throw;
        }
    }

    SystemSpec original = spec;
    for (std::size_t i = 0; i < rep.generators_canonical.size(); ++i) {
        GeneratorVerification gv;
        gv.name = rep.generators_canonical[i].name;
        bool zc = admittance_residual(Ac, Bc, rep.generators_canonical[i]).is_zero();
        bool zo = admittance_residual(original, rep.generators_original[i]).is_zero();
        gv.symbolic = (zc && zo) ? "zero" : "nonzero";
        if (!(zc && zo))
            throw internal_inconsistency("reported generator " + gv.name +
                                         " is not exactly admitted");
        rep.verification.push_back(gv);
    }

    if (cfg.verify) {
        rep.numeric_verified = true;
        std::mt19937_64 gen(cfg.seed);
        std::array<double, 4> init{symmetric_unit(gen), symmetric_unit(gen),
                                   symmetric_unit(gen), symmetric_unit(gen)};
        Trajectory traj_c = rk4_solve(Ac, Bc, init, 0.0, 1.0, cfg.flow_h);
        Trajectory traj_o = rk4_solve(original, init, 0.0, 1.0, cfg.flow_h);
        for (std::size_t i = 0; i < rep.generators_canonical.size(); ++i) {
            double worst = 0.0;
            for (double eps : cfg.epsilons) {
                worst = std::max(worst, flow_check(Ac, Bc, rep.generators_canonical[i],
                                                   eps, traj_c));
                worst = std::max(worst, flow_check(original, rep.generators_original[i],
                                                   eps, traj_o));
            }
            rep.verification[i].numeric_residual = worst;
            rep.verification[i].epsilons = cfg.epsilons;
            if (!(worst < cfg.tol)) rep.numeric_passed = false;
        }
    }
    return rep;
}

int exit_code_for(ErrorKind kind) { return static_cast<int>(kind); }

namespace {

ojson error_json(const Error& e) {
    ojson j;
    j["schema"] = 1;
    ojson err;
    err["code"] = exit_code_for(e.kind());
    err["message"] = e.what();
    j["error"] = err;
    return j;
}

} // namespace

int run_main(const RunConfig& cfg) {
    ojson doc;
    try {
        std::ifstream in(cfg.input_path);
        if (!in) throw malformed_input("cannot open input file " + cfg.input_path);
        doc = ojson::parse(in, nullptr, true);
    } catch (const ojson::parse_error& pe) {
        std::cerr << "error: malformed input: " << pe.what() << "\n";
        return exit_code_for(ErrorKind::MalformedInput);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }

    std::ostringstream out;
    int code = 0;
    bool batch = doc.is_array();
    std::vector<ojson> items;
    if (batch)
        for (const auto& item : doc) items.push_back(item);
    else
        items.push_back(doc);

    for (const auto& item : items) {
        try {
            SystemSpec spec = parse_input(item);
            ClassificationReport rep = run_report(spec, cfg);
            if (cfg.format == "text") out << report_to_text(rep) << "\n";
            else if (batch) out << report_to_json(rep).dump() << "\n";
            else out << report_to_json(rep).dump(2) << "\n";
            if (rep.numeric_verified && !rep.numeric_passed && code == 0)
                code = kExitVerificationFailed;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            if (cfg.format != "text") out << error_json(e).dump() << "\n";
            if (code == 0) code = exit_code_for(e.kind());
        }
    }

    if (cfg.output_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream ofs(cfg.output_path);
        if (!ofs) {
            std::cerr << "error: cannot open output file " << cfg.output_path << "\n";
            return exit_code_for(ErrorKind::Internal);
        }
        ofs << out.str();
    }
    return code;
}

} // namespace lieclass
