// Six +/-1-valued operators on the path(x)polarization space, the five joint
// eigenvalue relations they satisfy on the state (1/sqrt2)(|a,V) - |b,H)),
// and the value-assignment contradiction report.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "contextua/linalg.hpp"
#include "contextua/states.hpp"

namespace contextua {

enum class KsLabel : std::size_t {
    JxPol = 0,
    JxPath = 1,
    JyPol = 2,
    JyPath = 3,
    JxPolJyPath = 4,
    JyPolJxPath = 5,
};

const char* ks_label_name(KsLabel label);

struct KsOperator {
    KsLabel label;
    CMat matrix;  // hermitian, squares to identity
};

/// The six operators. Singles act per the fixed table (a<->b, a->ib/b->-ia on
/// path; V<->H, V->-iH/H->iV on polarization), lifted with identity on the
/// other factor; the composites are products of lifted singles.
std::array<KsOperator, 6> ks_operators();

/// 6x6 symmetric table; entry (i, j) true iff max-abs of [O_i, O_j] <= 1e-12.
std::array<std::array<bool, 6>, 6> commutation_audit(const std::array<KsOperator, 6>& ops);

struct EigenCheck {
    std::string relation;  // operator product applied to the state
    int eigenvalue;        // +1 or -1
    double residual;       // max-abs of O|s) - eigenvalue*|s)
};

struct KsReport {
    std::vector<EigenCheck> eigen_checks;  // five relations
    int lhs_product = 0;   // +1: every operator label occurs twice across the relations
    int rhs_product = 0;   // product of the five measured eigenvalues
    bool contradiction = false;

    std::string to_json(int indent = -1) const;
};

/// Verifies the five relations on `state` (the intended input is phi-),
/// matching O|s) against +/-|s) within 1e-12. Throws, naming the relation,
/// if neither sign fits.
KsReport eigen_verify(const BeamState& state);

/// Same check against a caller-supplied operator set, so a deliberately
/// corrupted operator can be fed through the failure path.
KsReport eigen_verify(const std::array<KsOperator, 6>& ops, const BeamState& state);

/// eigen_verify on bell_state(PhiMinus, 1).
KsReport eigen_verify_default();

}  // namespace contextua
