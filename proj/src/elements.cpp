#include "contextua/elements.hpp"

#include <cmath>
#include <stdexcept>

namespace contextua {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
const cx kI{0.0, 1.0};

}  // namespace

OpticalOperator npbs() {
    CMat path{{kInvSqrt2, kI * kInvSqrt2}, {kI * kInvSqrt2, kInvSqrt2}};
    OpticalOperator op;
    op.matrix = kron(path, CMat::identity(2));
    op.label = "npbs";
    op.unitary = true;
    op.lift = LiftKind::PathSpace;
    op.generator = path;
    return op;
}

OpticalOperator lift_on_path(const CMat& jones, Path p, const std::string& label) {
    if (jones.rows != 2 || jones.cols != 2) {
        throw std::invalid_argument("lift_on_path: expected 2x2 Jones matrix, got " +
                                    std::to_string(jones.rows) + "x" + std::to_string(jones.cols));
    }
    CMat m = CMat::identity(4);
    const std::size_t base = (p == Path::A) ? 0 : 2;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) m.at(base + r, base + c) = jones.at(r, c);
    OpticalOperator op;
    op.matrix = std::move(m);
    op.label = label;
    op.unitary = is_unitary(jones, 1e-12);
    op.lift = LiftKind::PolOnPath;
    op.generator = jones;
    op.path = p;
    return op;
}

OpticalOperator lift_path_space(const CMat& path_mat, const std::string& label) {
    if (path_mat.rows != 2 || path_mat.cols != 2) {
        throw std::invalid_argument("lift_path_space: expected 2x2, got " +
                                    std::to_string(path_mat.rows) + "x" +
                                    std::to_string(path_mat.cols));
    }
    OpticalOperator op;
    op.matrix = kron(path_mat, CMat::identity(2));
    op.label = label;
    op.unitary = is_unitary(path_mat, 1e-12);
    op.lift = LiftKind::PathSpace;
    op.generator = path_mat;
    return op;
}

CMat qwp_fast_vertical() { return CMat{{-kI, 0.0}, {0.0, 1.0}}; }

CMat qwp_fast_horizontal() { return CMat{{1.0, 0.0}, {0.0, -kI}}; }

CMat pol_flipper() { return CMat{{0.0, 1.0}, {1.0, 0.0}}; }

CMat phase_shifter(double phi) { return CMat{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}}; }

CMat pol_rotator(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return CMat{{c, -s}, {s, c}};
}

OpticalOperator compose(std::span<const OpticalOperator> pipeline) {
    if (pipeline.empty()) throw std::invalid_argument("compose: empty pipeline");
    OpticalOperator out;
    out.matrix = pipeline.front().matrix;
    out.label = pipeline.front().label;
    out.unitary = pipeline.front().unitary;
    for (std::size_t i = 1; i < pipeline.size(); ++i) {
        out.matrix = matmul(pipeline[i].matrix, out.matrix);
        out.label = pipeline[i].label + "." + out.label;
        out.unitary = out.unitary && pipeline[i].unitary;
    }
    out.lift = LiftKind::Whole;
    out.generator.reset();
    return out;
}

BeamState apply(const OpticalOperator& op, const BeamState& s) {
    CVec out = matvec(op.matrix, s.amplitudes);
    if (op.unitary) {
        // unitaries preserve norm; renormalize the last-ulp drift
        double n = out.norm();
        for (cx& a : out.c) a /= n;
    }
    return BeamState(std::move(out), s.intensity);
}

}  // namespace contextua
