// Analyzer projectors and observables, expectation values, the four
// detected intensities, and the intensity-ratio correlation estimator.

#pragma once

#include <string>

#include "contextua/elements.hpp"
#include "contextua/linalg.hpp"
#include "contextua/states.hpp"

namespace contextua {

/// Analyzer phases: theta for the polarization arm, phi for the path arm.
struct AnalyzerAngles {
    double theta;
    double phi;
};

enum class Branch { Zero, Pi };

/// Detected intensities at the four analyzer orientations
/// (theta,phi), (theta+pi,phi+pi), (theta+pi,phi), (theta,phi+pi).
struct IntensityQuad {
    double i_00;
    double i_pp;
    double i_p0;
    double i_0p;

    double total() const { return i_00 + i_pp + i_p0 + i_0p; }
};

/// Rank-2 projector (1/2)(|V)+s e^{i theta}|H))((V|+s e^{-i theta}(H|) (x) I_path,
/// s = +1 for branch 0 and -1 for branch pi.
OpticalOperator projector_pol(double theta, Branch branch);

/// Mirror of projector_pol on the path space.
OpticalOperator projector_path(double phi, Branch branch);

/// Difference of the two branch projectors:
/// (e^{-i theta}|V)(H| + e^{i theta}|H)(V|) (x) I_path.
OpticalOperator sigma_theta(double theta);

/// I_pol (x) (e^{-i phi}|a)(b| + e^{i phi}|b)(a|).
OpticalOperator sigma_phi(double phi);

/// (s|O|s) for hermitian O. Throws if O is not hermitian within 1e-12 or if
/// the imaginary residue of the expectation exceeds 1e-12.
double expectation(const BeamState& s, const OpticalOperator& o);

/// E(theta, phi) = (s| sigma_theta . sigma_phi |s).
double correlation_direct(const BeamState& s, const AnalyzerAngles& a);

/// Expectations of the four projector products, scaled by s.intensity.
IntensityQuad intensity_quad(const BeamState& s, const AnalyzerAngles& a);

/// (i00 + ipp - ip0 - i0p) / (i00 + ipp + ip0 + i0p).
/// Throws on zero total intensity (dark input).
double correlation_from_intensities(const IntensityQuad& q);

/// CSV row "theta,phi,i00,ipp,ip0,i0p,E" with 17 significant digits.
std::string quad_csv_row(const AnalyzerAngles& a, const IntensityQuad& q);

}  // namespace contextua
