#include "contextua/kochen_specker.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace contextua {

namespace {

const cx kI{0.0, 1.0};

CMat pauli_x() { return CMat{{0.0, 1.0}, {1.0, 0.0}}; }

// a -> ib, b -> -ia
CMat path_y() { return CMat{{0.0, -kI}, {kI, 0.0}}; }

// V -> -iH, H -> iV
CMat pol_y() { return CMat{{0.0, kI}, {-kI, 0.0}}; }

}  // namespace

const char* ks_label_name(KsLabel label) {
    switch (label) {
        case KsLabel::JxPol: return "Jx_pol";
        case KsLabel::JxPath: return "Jx_path";
        case KsLabel::JyPol: return "Jy_pol";
        case KsLabel::JyPath: return "Jy_path";
        case KsLabel::JxPolJyPath: return "JxPol_JyPath";
        case KsLabel::JyPolJxPath: return "JyPol_JxPath";
    }
    return "?";
}

std::array<KsOperator, 6> ks_operators() {
    const CMat id2 = CMat::identity(2);
    CMat jx_pol = kron(id2, pauli_x());
    CMat jx_path = kron(pauli_x(), id2);
    CMat jy_pol = kron(id2, pol_y());
    CMat jy_path = kron(path_y(), id2);
    CMat c1 = matmul(jx_pol, jy_path);
    CMat c2 = matmul(jy_pol, jx_path);
    return {KsOperator{KsLabel::JxPol, std::move(jx_pol)},
            KsOperator{KsLabel::JxPath, std::move(jx_path)},
            KsOperator{KsLabel::JyPol, std::move(jy_pol)},
            KsOperator{KsLabel::JyPath, std::move(jy_path)},
            KsOperator{KsLabel::JxPolJyPath, std::move(c1)},
            KsOperator{KsLabel::JyPolJxPath, std::move(c2)}};
}

std::array<std::array<bool, 6>, 6> commutation_audit(const std::array<KsOperator, 6>& ops) {
    std::array<std::array<bool, 6>, 6> table{};
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            const CMat comm = sub(matmul(ops[i].matrix, ops[j].matrix),
                                  matmul(ops[j].matrix, ops[i].matrix));
            table[i][j] = max_abs(comm) <= 1e-12;
        }
    }
    return table;
}

std::string KsReport::to_json(int indent) const {
    nlohmann::json j;
    nlohmann::json rels = nlohmann::json::array();
    for (const EigenCheck& c : eigen_checks) {
        rels.push_back({{"label", c.relation}, {"eigenvalue", c.eigenvalue}, {"residual", c.residual}});
    }
    j["relations"] = rels;
    j["lhs_product"] = lhs_product;
    j["rhs_product"] = rhs_product;
    j["contradiction"] = contradiction;
    return j.dump(indent);
}

KsReport eigen_verify(const BeamState& state) { return eigen_verify(ks_operators(), state); }

KsReport eigen_verify(const std::array<KsOperator, 6>& ops, const BeamState& state) {
    auto op = [&](KsLabel l) -> const CMat& { return ops[static_cast<std::size_t>(l)].matrix; };

    struct Relation {
        std::string name;
        std::vector<KsLabel> factors;  // leftmost applied last
        CMat product;
    };
    auto make_relation = [&](std::vector<KsLabel> factors) {
        Relation rel;
        rel.factors = std::move(factors);
        rel.product = CMat::identity(4);
        for (KsLabel l : rel.factors) {
            rel.product = matmul(rel.product, op(l));
            if (!rel.name.empty()) rel.name += ".";
            rel.name += ks_label_name(l);
        }
        return rel;
    };
    const std::array<Relation, 5> relations = {
        make_relation({KsLabel::JxPol, KsLabel::JxPath}),
        make_relation({KsLabel::JyPol, KsLabel::JyPath}),
        make_relation({KsLabel::JxPolJyPath, KsLabel::JxPol, KsLabel::JyPath}),
        make_relation({KsLabel::JyPolJxPath, KsLabel::JyPol, KsLabel::JxPath}),
        make_relation({KsLabel::JxPolJyPath, KsLabel::JyPolJxPath}),
    };

    KsReport rep;
    rep.rhs_product = 1;
    for (const Relation& rel : relations) {
        const CVec mapped = matvec(rel.product, state.amplitudes);
        double res_plus = 0.0, res_minus = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            res_plus = std::max(res_plus, std::abs(mapped[i] - state.amplitudes[i]));
            res_minus = std::max(res_minus, std::abs(mapped[i] + state.amplitudes[i]));
        }
        const int eigenvalue = (res_plus <= res_minus) ? 1 : -1;
        const double residual = std::min(res_plus, res_minus);
        if (residual > 1e-12) {
            throw std::runtime_error("eigen_verify: relation '" + rel.name +
                                     "' residual " + std::to_string(residual));
        }
        rep.eigen_checks.push_back({rel.name, eigenvalue, residual});
        rep.rhs_product *= eigenvalue;
    }
    // Under value definiteness, the product of predetermined +/-1 values over
    // all five left-hand sides is Prod_l v(l)^{count(l)}. Each label occurs an
    // even number of times (exactly twice), so the product is +1 whatever the
    // assignment. This is a counting statement, not a matrix product; the
    // operator product of the five relations is what yields -1.
    std::array<int, 6> occurrences{};
    for (const Relation& rel : relations)
        for (KsLabel l : rel.factors) ++occurrences[static_cast<std::size_t>(l)];
    bool all_even = true;
    for (int c : occurrences) all_even = all_even && (c % 2 == 0);
    rep.lhs_product = all_even ? 1 : 0;
    rep.contradiction = (rep.lhs_product != rep.rhs_product);
    return rep;
}

KsReport eigen_verify_default() { return eigen_verify(bell_state(BellKind::PhiMinus, 1.0)); }

}  // namespace contextua
