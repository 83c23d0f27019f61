#include "contextua/states.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace contextua {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

double reduce_angle(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("ProductStateParams: non-finite angle");
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

}  // namespace

BeamState::BeamState(CVec amps, double intensity_) : amplitudes(std::move(amps)), intensity(intensity_) {
    if (amplitudes.dim() != 4) {
        throw std::invalid_argument("BeamState: expected dim 4, got " +
                                    std::to_string(amplitudes.dim()));
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("BeamState: amplitudes not unit norm");
    }
    if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
        throw std::invalid_argument("BeamState: intensity must be finite and >= 0");
    }
}

ProductStateParams::ProductStateParams(double a, double b, double g, double d)
    : alpha(reduce_angle(a)), beta(reduce_angle(b)), gamma(reduce_angle(g)), delta(reduce_angle(d)) {}

const char* bell_name(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

BeamState product_state(const ProductStateParams& p, double intensity) {
    CVec pol{cx{std::cos(p.alpha), 0.0}, std::polar(std::sin(p.alpha), p.beta)};
    CVec path{cx{std::cos(p.gamma), 0.0}, std::polar(std::sin(p.gamma), p.delta)};
    CVec amps = tensor(path, pol);
    // renormalize away the last-ulp drift so the unit-norm invariant is exact
    double n = amps.norm();
    for (cx& a : amps.c) a /= n;
    return BeamState(std::move(amps), intensity);
}

BeamState bell_state(BellKind kind, double intensity) {
    CVec amps{cx{0.0}, cx{0.0}, cx{0.0}, cx{0.0}};
    switch (kind) {
        case BellKind::PhiPlus:
            amps[0] = kInvSqrt2;
            amps[3] = kInvSqrt2;
            break;
        case BellKind::PhiMinus:
            amps[0] = kInvSqrt2;
            amps[3] = -kInvSqrt2;
            break;
        case BellKind::PsiPlus:
            amps[1] = kInvSqrt2;
            amps[2] = kInvSqrt2;
            break;
        case BellKind::PsiMinus:
            amps[1] = kInvSqrt2;
            amps[2] = -kInvSqrt2;
            break;
    }
    return BeamState(std::move(amps), intensity);
}

bool schmidt_separable(const BeamState& s, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("schmidt_separable: tol must be > 0");
    const CVec& a = s.amplitudes;
    cx det = a[0] * a[3] - a[1] * a[2];  // rows = path, cols = pol
    return std::abs(det) <= tol;
}

std::string state_to_json(const BeamState& s, int indent) {
    nlohmann::json j;
    j["intensity"] = s.intensity;
    nlohmann::json amps = nlohmann::json::array();
    for (const cx& a : s.amplitudes.c) amps.push_back({a.real(), a.imag()});
    j["amplitudes"] = amps;
    j["basis"] = kBasisLabels;
    return j.dump(indent);
}

}  // namespace contextua
