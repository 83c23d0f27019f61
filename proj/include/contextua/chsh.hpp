// The four-correlation quantity S, the |S| <= 2 product-state bound audit,
// grid sweeps around the known optimum, and a derivative-free maximizer.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contextua/measurement.hpp"
#include "contextua/states.hpp"

namespace contextua {

/// Analyzer settings of one S evaluation.
struct AngleSet {
    double theta1;
    double theta2;
    double phi1;
    double phi2;
};

/// Violation threshold separating numerical noise from a genuine excess over 2.
inline constexpr double kViolationEps = 1e-9;

struct ChshResult {
    double s_value;
    double e11, e12, e21, e22;  // E(t1,f1), E(t1,f2), E(t2,f1), E(t2,f2)
    bool violates_bound;        // |S| > 2 + kViolationEps

    std::string to_json(int indent = -1) const;
};

struct BoundSampleReport {
    std::uint64_t samples;
    double max_abs_s;
    std::uint64_t seed;
    bool any_violation;  // max_abs_s > 2 + kViolationEps
    // draw attaining the maximum
    ProductStateParams argmax_params{0, 0, 0, 0};
    AngleSet argmax_angles{0, 0, 0, 0};
    std::uint64_t argmax_index = 0;

    std::string to_json(int indent = -1) const;
};

/// S = E(t1,f1) + E(t1,f2) - E(t2,f1) + E(t2,f2), correlations via
/// correlation_direct. Note the single minus sits on the (t2,f1) term.
ChshResult chsh_value(const BeamState& s, const AngleSet& angles);

/// n independent (product state, angle set) draws, all eight parameters
/// uniform in [0, 2*pi); reports the largest |S|. Deterministic in seed:
/// draw i uses SplitMix64::substream(seed, i).
BoundSampleReport product_bound_sample(std::uint64_t n, std::uint64_t seed);

/// Coordinate ascent of |S| over the eight product-state parameters
/// (alpha, beta, gamma, delta, theta1, theta2, phi1, phi2), started from the
/// given point. Returns the refined maximum. Used to show the product bound
/// is approached from below.
double product_bound_ascend(ProductStateParams params, AngleSet angles, double tol);

enum class ScanMode { Slice, FullGrid };

struct ScanRow {
    AngleSet angles;
    double e11, e12, e21, e22;
    double s;
};

/// Slice mode: theta1 = 0, theta2 = pi/2, phi1 = x, phi2 = -x with x on an
/// inclusive [0, 2*pi] grid of `grid` points. FullGrid mode: every angle on a
/// [0, 2*pi) grid of `grid` points, lexicographic row order.
std::vector<ScanRow> violation_scan(BellKind kind, int grid, ScanMode mode = ScanMode::Slice);

/// "theta1,theta2,phi1,phi2,E11,E12,E21,E22,S" header plus one row per entry.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

struct SearchResult {
    AngleSet angles;
    double s_value;  // signed S at the returned angles
    double abs_s;
};

/// Cyclic 1-D golden-section ascent of |S| over the four analyzer angles from
/// the best point of a coarse grid; stops when a full sweep improves by < tol.
SearchResult max_violation_search(const BeamState& s, double tol);
SearchResult max_violation_search(BellKind kind, double tol);

}  // namespace contextua
