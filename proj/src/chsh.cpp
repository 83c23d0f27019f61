#include "contextua/chsh.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "contextua/rng.hpp"

namespace contextua {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfPi = 1.5707963267948966192313216916398;

// Golden-section maximization of f on [lo, hi]; f assumed unimodal there.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double* best_x) {
    constexpr double kInvPhi = 0.61803398874989484820458683436564;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-13) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    double fm = f(xm);
    if (best_x) *best_x = xm;
    return fm;
}

// One-dimensional global maximization over a full period: coarse scan to
// localize the winning lobe, then golden-section inside the bracket.
double line_max(const std::function<double(double)>& f, double* best_x) {
    constexpr int kScan = 24;
    const double h = kTwoPi / kScan;
    double bx = 0.0, bf = f(0.0);
    for (int k = 1; k < kScan; ++k) {
        double x = k * h;
        double v = f(x);
        if (v > bf) {
            bf = v;
            bx = x;
        }
    }
    return golden_max(f, bx - h, bx + h, best_x);
}

struct AscentProblem {
    std::vector<double> x;
    std::function<double(const std::vector<double>&)> objective;
};

// Cyclic coordinate ascent; stops when a full sweep improves by < tol.
double coordinate_ascent(AscentProblem& p, double tol, int max_sweeps = 200) {
    double best = p.objective(p.x);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double before = best;
        for (std::size_t i = 0; i < p.x.size(); ++i) {
            auto line = [&](double xi) {
                std::vector<double> y = p.x;
                y[i] = xi;
                return p.objective(y);
            };
            double xi_best;
            double v = line_max(line, &xi_best);
            if (v > best) {
                best = v;
                p.x[i] = xi_best;
            }
        }
        if (best - before < tol) break;
    }
    return best;
}

}  // namespace

std::string ChshResult::to_json(int indent) const {
    nlohmann::json j;
    j["s_value"] = s_value;
    j["correlations"] = {{"e11", e11}, {"e12", e12}, {"e21", e21}, {"e22", e22}};
    j["violates_bound"] = violates_bound;
    return j.dump(indent);
}

std::string BoundSampleReport::to_json(int indent) const {
    nlohmann::json j;
    j["n"] = samples;
    j["seed"] = seed;
    j["max_abs_s"] = max_abs_s;
    j["argmax"] = {{"index", argmax_index},
                   {"alpha", argmax_params.alpha},
                   {"beta", argmax_params.beta},
                   {"gamma", argmax_params.gamma},
                   {"delta", argmax_params.delta},
                   {"theta1", argmax_angles.theta1},
                   {"theta2", argmax_angles.theta2},
                   {"phi1", argmax_angles.phi1},
                   {"phi2", argmax_angles.phi2}};
    j["any_violation"] = any_violation;
    return j.dump(indent);
}

ChshResult chsh_value(const BeamState& s, const AngleSet& angles) {
    ChshResult r;
    r.e11 = correlation_direct(s, {angles.theta1, angles.phi1});
    r.e12 = correlation_direct(s, {angles.theta1, angles.phi2});
    r.e21 = correlation_direct(s, {angles.theta2, angles.phi1});
    r.e22 = correlation_direct(s, {angles.theta2, angles.phi2});
    r.s_value = r.e11 + r.e12 - r.e21 + r.e22;
    r.violates_bound = std::abs(r.s_value) > 2.0 + kViolationEps;
    return r;
}

BoundSampleReport product_bound_sample(std::uint64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("product_bound_sample: n must be >= 1");
    BoundSampleReport rep;
    rep.samples = n;
    rep.seed = seed;
    rep.max_abs_s = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        SplitMix64 rng = SplitMix64::substream(seed, i);
        ProductStateParams params(rng.next_angle(), rng.next_angle(), rng.next_angle(),
                                  rng.next_angle());
        AngleSet angles{rng.next_angle(), rng.next_angle(), rng.next_angle(), rng.next_angle()};
        const BeamState state = product_state(params, 1.0);
        const double abs_s = std::abs(chsh_value(state, angles).s_value);
        if (abs_s > rep.max_abs_s) {
            rep.max_abs_s = abs_s;
            rep.argmax_params = params;
            rep.argmax_angles = angles;
            rep.argmax_index = i;
        }
    }
    rep.any_violation = rep.max_abs_s > 2.0 + kViolationEps;
    return rep;
}

double product_bound_ascend(ProductStateParams params, AngleSet angles, double tol) {
    AscentProblem p;
    p.x = {params.alpha, params.beta,  params.gamma, params.delta,
           angles.theta1, angles.theta2, angles.phi1, angles.phi2};
    p.objective = [](const std::vector<double>& x) {
        const BeamState s = product_state(ProductStateParams(x[0], x[1], x[2], x[3]), 1.0);
        return std::abs(chsh_value(s, AngleSet{x[4], x[5], x[6], x[7]}).s_value);
    };
    return coordinate_ascent(p, tol);
}

std::vector<ScanRow> violation_scan(BellKind kind, int grid, ScanMode mode) {
    if (grid < 2) throw std::invalid_argument("violation_scan: grid must be >= 2");
    const BeamState state = bell_state(kind, 1.0);
    std::vector<ScanRow> rows;
    auto emit = [&](const AngleSet& a) {
        const ChshResult r = chsh_value(state, a);
        rows.push_back({a, r.e11, r.e12, r.e21, r.e22, r.s_value});
    };
    if (mode == ScanMode::Slice) {
        const double step = kTwoPi / (grid - 1);
        for (int k = 0; k < grid; ++k) {
            const double x = k * step;
            emit({0.0, kHalfPi, x, -x});
        }
    } else {
        const double step = kTwoPi / grid;
        for (int i1 = 0; i1 < grid; ++i1)
            for (int i2 = 0; i2 < grid; ++i2)
                for (int j1 = 0; j1 < grid; ++j1)
                    for (int j2 = 0; j2 < grid; ++j2)
                        emit({i1 * step, i2 * step, j1 * step, j2 * step});
    }
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "theta1,theta2,phi1,phi2,E11,E12,E21,E22,S\n";
    char buf[512];
    for (const ScanRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.angles.theta1, r.angles.theta2, r.angles.phi1, r.angles.phi2, r.e11, r.e12,
                      r.e21, r.e22, r.s);
        out += buf;
    }
    return out;
}

SearchResult max_violation_search(const BeamState& s, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("max_violation_search: tol must be > 0");
    // coarse 4-D grid start
    constexpr int kGrid = 8;
    const double step = kTwoPi / kGrid;
    std::vector<double> best_x = {0, 0, 0, 0};
    double best = -1.0;
    for (int i1 = 0; i1 < kGrid; ++i1)
        for (int i2 = 0; i2 < kGrid; ++i2)
            for (int j1 = 0; j1 < kGrid; ++j1)
                for (int j2 = 0; j2 < kGrid; ++j2) {
                    AngleSet a{i1 * step, i2 * step, j1 * step, j2 * step};
                    double v = std::abs(chsh_value(s, a).s_value);
                    if (v > best) {
                        best = v;
                        best_x = {a.theta1, a.theta2, a.phi1, a.phi2};
                    }
                }
    AscentProblem p;
    p.x = best_x;
    p.objective = [&s](const std::vector<double>& x) {
        return std::abs(chsh_value(s, AngleSet{x[0], x[1], x[2], x[3]}).s_value);
    };
    coordinate_ascent(p, tol);
    SearchResult res;
    res.angles = AngleSet{p.x[0], p.x[1], p.x[2], p.x[3]};
    const ChshResult r = chsh_value(s, res.angles);
    res.s_value = r.s_value;
    res.abs_s = std::abs(r.s_value);
    return res;
}

SearchResult max_violation_search(BellKind kind, double tol) {
    return max_violation_search(bell_state(kind, 1.0), tol);
}

}  // namespace contextua
