// Optical elements as 4x4 operators on the path(x)polarization space.
// 2x2 generators (Jones matrices on polarization, mixers/phases on path)
// are lifted into the product space; the generator and lift kind are kept
// alongside the matrix so bench files can be printed back.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contextua/linalg.hpp"
#include "contextua/states.hpp"

namespace contextua {

enum class Path { A = 0, B = 1 };

enum class LiftKind {
    PolOnPath,   // |p)(p| (x) J + |q)(q| (x) I
    PathSpace,   // M_path (x) I_pol
    Whole,       // generic 4x4 (compositions)
};

struct OpticalOperator {
    CMat matrix;  // 4x4
    std::string label;
    bool unitary = false;
    LiftKind lift = LiftKind::Whole;
    std::optional<CMat> generator;  // the 2x2 this was lifted from, if any
    Path path = Path::A;            // target arm for PolOnPath lifts
};

/// 50-50 non-polarizing beam splitter: (1/sqrt2)[[1,i],[i,1]] on path, identity on polarization.
OpticalOperator npbs();

/// |p)(p| (x) J + |other)(other| (x) I. Unitary flag set iff J is unitary.
OpticalOperator lift_on_path(const CMat& jones, Path p, const std::string& label = "lift");

/// Path-space element M (x) I_pol.
OpticalOperator lift_path_space(const CMat& path_mat, const std::string& label = "path");

/// Quarter-wave plate, fast axis vertical: V -> -iV, H -> H on {V,H}.
/// The net action i*J|V) = |V) is what turns the beam-splitter output into
/// an equal in-phase superposition.
CMat qwp_fast_vertical();

/// Quarter-wave plate, fast axis horizontal: V -> V, H -> -iH.
CMat qwp_fast_horizontal();

/// Polarization flipper: V <-> H.
CMat pol_flipper();

/// diag(1, e^{i phi}) on the path basis {a, b}.
CMat phase_shifter(double phi);

/// Active rotation on {V,H}: [[cos t, -sin t],[sin t, cos t]] (V toward H for t > 0).
CMat pol_rotator(double theta);

/// Right-to-left product: the first listed element is applied first.
/// Throws on an empty pipeline.
OpticalOperator compose(std::span<const OpticalOperator> pipeline);

BeamState apply(const OpticalOperator& op, const BeamState& s);

}  // namespace contextua
