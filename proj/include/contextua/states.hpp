// Beam states over the path(x)polarization product space: product states,
// the four Bell-like states, and the separability test.

#pragma once

#include <string>

#include "contextua/linalg.hpp"

namespace contextua {

/// Tensor-product basis, path-major: index = 2*path + pol with a=0, b=1, V=0, H=1.
inline constexpr const char* kBasisLabels = "aV,aH,bV,bH";

/// A beam: unit-norm 4-component amplitude vector plus a separate total
/// intensity. Classical beams carry arbitrary intensity, so normalization
/// lives here and not in the amplitudes.
struct BeamState {
    CVec amplitudes;   // dim 4, unit Euclidean norm within 1e-12
    double intensity;  // >= 0, arbitrary units

    BeamState(CVec amps, double intensity_);
};

/// Angles (radians) of a general normalized product state
/// (cos a|V) + e^{ib} sin a|H)) (x) (cos g|a) + e^{id} sin g|b)).
/// Reduced to [0, 2*pi) on construction.
struct ProductStateParams {
    double alpha;
    double beta;
    double gamma;
    double delta;

    ProductStateParams(double a, double b, double g, double d);
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char* bell_name(BellKind kind);

BeamState product_state(const ProductStateParams& p, double intensity);
BeamState bell_state(BellKind kind, double intensity);

/// Rank-1 test on the reshaped 2x2 amplitude matrix M[path][pol]:
/// separable iff |det M| <= tol.
bool schmidt_separable(const BeamState& s, double tol);

/// {"intensity":..., "amplitudes":[[re,im] x4], "basis":"aV,aH,bV,bH"}
std::string state_to_json(const BeamState& s, int indent = -1);

}  // namespace contextua
