#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieclass/classify.hpp"
#include "lieclass/jordan.hpp"
#include "lieclass/system.hpp"

namespace lieclass {

using ojson = nlohmann::ordered_json;

struct GeneratorVerification {
    std::string name;
    std::string symbolic; // "zero" or "nonzero"
    std::optional<double> numeric_residual;
    std::vector<double> epsilons;
};

struct ClassificationReport {
    SystemSpec input;
    bool commuting = false;
    Label label = Label::CommutingReducible;
    CanonicalForm form;
    std::optional<JordanResult> m_jordan; // Jordan data of M, commuting branch
    bool m_jordan_attempted = false;
    TransformChain chain;
    std::vector<VectorField> generators_canonical;
    std::vector<VectorField> generators_original;
    std::vector<GeneratorVerification> verification;
    bool numeric_verified = false;
    bool numeric_passed = true;
    double tol = 1e-6;
};

// Scalar <-> JSON ("p/q" string, or {"rat","ext","d"} for extension values).
ojson scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const ojson& j);

ojson mat2_to_json(const Mat2& m);
ojson vec2_to_json(const Vec2& v);
ojson exppoly_to_json(const ExpPoly& p);
ojson step_to_json(const TransformStep& s);
ojson chain_to_json(const TransformChain& c);
ojson vf_to_json(const VectorField& f);

ojson report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

/// Human rendering "xi d/dx + (eta1) d/dy + (eta2) d/dz".
std::string vf_to_text(const VectorField& f);

} // namespace lieclass
