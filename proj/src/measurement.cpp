#include "contextua/measurement.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace contextua {

namespace {

// (1/2)(e0 + s e^{i angle} e1)(e0 + s e^{i angle} e1)^dagger on a 2-dim factor
CMat branch_projector_2x2(double angle, Branch branch) {
    const double s = (branch == Branch::Zero) ? 1.0 : -1.0;
    const cx w = std::polar(s, angle);  // s * e^{i angle}
    CMat p(2, 2);
    p.at(0, 0) = 0.5;
    p.at(0, 1) = 0.5 * std::conj(w);
    p.at(1, 0) = 0.5 * w;
    p.at(1, 1) = 0.5;
    return p;
}

OpticalOperator make_op(CMat m, std::string label) {
    OpticalOperator op;
    op.matrix = std::move(m);
    op.label = std::move(label);
    op.unitary = false;
    op.lift = LiftKind::Whole;
    return op;
}

}  // namespace

OpticalOperator projector_pol(double theta, Branch branch) {
    return make_op(kron(CMat::identity(2), branch_projector_2x2(theta, branch)),
                   branch == Branch::Zero ? "sigma_theta_0" : "sigma_theta_pi");
}

OpticalOperator projector_path(double phi, Branch branch) {
    return make_op(kron(branch_projector_2x2(phi, branch), CMat::identity(2)),
                   branch == Branch::Zero ? "sigma_phi_0" : "sigma_phi_pi");
}

OpticalOperator sigma_theta(double theta) {
    CMat s(2, 2);
    s.at(0, 1) = std::polar(1.0, -theta);
    s.at(1, 0) = std::polar(1.0, theta);
    OpticalOperator op = make_op(kron(CMat::identity(2), s), "sigma_theta");
    op.unitary = true;  // hermitian involution
    return op;
}

OpticalOperator sigma_phi(double phi) {
    CMat s(2, 2);
    s.at(0, 1) = std::polar(1.0, -phi);
    s.at(1, 0) = std::polar(1.0, phi);
    OpticalOperator op = make_op(kron(s, CMat::identity(2)), "sigma_phi");
    op.unitary = true;
    return op;
}

double expectation(const BeamState& s, const OpticalOperator& o) {
    if (!is_hermitian(o.matrix, 1e-12)) {
        throw std::invalid_argument("expectation: operator '" + o.label + "' is not hermitian");
    }
    cx val = inner(s.amplitudes, matvec(o.matrix, s.amplitudes));
    if (std::abs(val.imag()) > 1e-12) {
        throw std::runtime_error("expectation: imaginary residue " + std::to_string(val.imag()));
    }
    return val.real();
}

double correlation_direct(const BeamState& s, const AnalyzerAngles& a) {
    OpticalOperator prod =
        make_op(matmul(sigma_theta(a.theta).matrix, sigma_phi(a.phi).matrix), "sigma_theta.sigma_phi");
    return expectation(s, prod);
}

IntensityQuad intensity_quad(const BeamState& s, const AnalyzerAngles& a) {
    const CMat p_t0 = projector_pol(a.theta, Branch::Zero).matrix;
    const CMat p_tp = projector_pol(a.theta, Branch::Pi).matrix;
    const CMat p_f0 = projector_path(a.phi, Branch::Zero).matrix;
    const CMat p_fp = projector_path(a.phi, Branch::Pi).matrix;

    auto detect = [&](const CMat& pol, const CMat& path) {
        OpticalOperator op = make_op(matmul(pol, path), "projector_product");
        return expectation(s, op) * s.intensity;
    };
    IntensityQuad q;
    q.i_00 = detect(p_t0, p_f0);
    q.i_pp = detect(p_tp, p_fp);
    q.i_p0 = detect(p_tp, p_f0);
    q.i_0p = detect(p_t0, p_fp);
    return q;
}

double correlation_from_intensities(const IntensityQuad& q) {
    const double total = q.total();
    if (!(total > 0.0)) {
        throw std::invalid_argument("correlation_from_intensities: dark input (total intensity " +
                                    std::to_string(total) + ")");
    }
    return (q.i_00 + q.i_pp - q.i_p0 - q.i_0p) / total;
}

std::string quad_csv_row(const AnalyzerAngles& a, const IntensityQuad& q) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", a.theta, a.phi,
                  q.i_00, q.i_pp, q.i_p0, q.i_0p, correlation_from_intensities(q));
    return std::string(buf);
}

}  // namespace contextua
