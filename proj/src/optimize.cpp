#include "fraxis/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fraxis {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kDegenerateGap = 1e-9;

double wrap_angle(double x) {
    double y = std::remainder(x, 2.0 * M_PI);
    if (y <= -M_PI) {
        y += 2.0 * M_PI;
    }
    return y;
}

Axis to_axis(const Vec3& v) {
    const Vec3 n = v.normalized();
    return Axis{n.x, n.y, n.z};
}

Vec3 to_vec(const Axis& a) {
    return Vec3{a.x, a.y, a.z};
}

// The six Hermitian substitution gates measuring the r elements.
const std::array<Unitary2, 6>& r_element_gates() {
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    static const std::array<Unitary2, 6> gates = {
        Unitary2{0.0, 1.0, 1.0, 0.0},                                        // X
        Unitary2{0.0, -kI, kI, 0.0},                                         // Y
        Unitary2{1.0, 0.0, 0.0, -1.0},                                       // Z
        Unitary2{0.0, inv_sqrt2 * Complex{1.0, -1.0},
                 inv_sqrt2 * Complex{1.0, 1.0}, 0.0},                        // (X+Y)/sqrt2
        Unitary2{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2},               // (X+Z)/sqrt2
        Unitary2{inv_sqrt2, -kI * inv_sqrt2, kI * inv_sqrt2, -inv_sqrt2},    // (Y+Z)/sqrt2
    };
    return gates;
}

struct Sinusoid {
    double offset = 0.0;  // a
    double amp = 0.0;     // k >= 0
    double phase = 0.0;   // delta
    bool flat = false;

    double minimum() const { return flat ? offset : offset - amp; }
    double minimizer() const { return wrap_angle(phase + M_PI); }
};

// Fits E(theta) = a + k cos(theta - delta) through E(0), E(+pi/2), E(-pi/2).
Sinusoid fit_sinusoid(double e_zero, double e_plus, double e_minus) {
    Sinusoid fit;
    fit.offset = 0.5 * (e_plus + e_minus);
    const double kc = e_zero - fit.offset;
    const double ks = 0.5 * (e_plus - e_minus);
    fit.amp = std::hypot(kc, ks);
    if (fit.amp < 1e-12) {
        fit.flat = true;
    } else {
        fit.phase = std::atan2(ks, kc);
    }
    return fit;
}

}  // namespace

double Vec3::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n < 1e-300) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    return Vec3{x / n, y / n, z / n};
}

Vec3 Mat3::apply(const Vec3& v) const {
    return Vec3{m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

double Mat3::quadratic_form(const Vec3& v) const {
    return v.dot(apply(v));
}

EigenTriple eig3_symmetric(const Mat3& r) {
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            scale = std::max(scale, std::abs(r.m[i][j]));
            if (std::abs(r.m[i][j] - r.m[j][i]) > 1e-9 * std::max(1.0, scale)) {
                throw std::invalid_argument("matrix is not symmetric");
            }
        }
    }
    double a[3][3];
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            a[i][j] = 0.5 * (r.m[i][j] + r.m[j][i]);
        }
    }
    // Cyclic Jacobi; converges to machine precision in a handful of sweeps.
    for (int iteration = 0; iteration < 64; ++iteration) {
        const double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off < 1e-15 * std::max(1.0, scale)) {
            break;
        }
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });
    EigenTriple result;
    for (int i = 0; i < 3; ++i) {
        const int col = order[i];
        result.values[i] = a[col][col];
        Vec3 vec{v[0][col], v[1][col], v[2][col]};
        vec = vec.normalized();
        // Sign convention: first component of meaningful magnitude is positive.
        double lead = 0.0;
        for (double component : {vec.x, vec.y, vec.z}) {
            if (std::abs(component) > 1e-12) {
                lead = component;
                break;
            }
        }
        if (lead < 0.0) {
            vec = vec * -1.0;
        }
        result.vectors[i] = vec;
    }
    return result;
}

double AxisModel::landscape_pi(const Vec3& axis) const {
    return 0.5 * quadratic.quadratic_form(axis);
}

double AxisModel::landscape(const Vec3& axis, double theta) const {
    if (!has_linear) {
        throw std::logic_error("landscape at arbitrary theta requires the linear part");
    }
    const double half = 0.5 * theta;
    const double c = std::cos(half);
    const double s = std::sin(half);
    return c * c * e_identity + s * c * linear.dot(axis) +
           0.5 * s * s * quadratic.quadratic_form(axis);
}

EnergyEvaluator EnergyEvaluator::exact() {
    return EnergyEvaluator(0, 0);
}

EnergyEvaluator EnergyEvaluator::with_shots(std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot mode requires shots >= 1");
    }
    return EnergyEvaluator(shots, seed);
}

double EnergyEvaluator::substitution_energy(const Circuit& c, const PauliSum& m,
                                            std::size_t slot, const Unitary2& u) {
    ++count_;
    if (shots_ == 0) {
        return energy_with_substitution(c, m, slot, u);
    }
    const ParamGate& param = c.param_at(slot);
    StateVector state = c.initial_state();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == slot) {
            state.apply_1q(param.qubit, u);
        } else {
            const GateSlot& s = c.slots()[i];
            if (const auto* p = std::get_if<ParamGate>(&s)) {
                state.apply_1q(p->qubit, rotation_unitary(p->axis, p->theta));
            } else if (const auto* f = std::get_if<FixedSlot>(&s)) {
                state.apply_1q(f->qubit, fixed_gate_matrix(f->gate));
            } else {
                const auto& ent = std::get<EntanglerSlot>(s);
                if (ent.kind == EntanglerKind::CX) state.apply_cx(ent.control, ent.target);
                else state.apply_cz(ent.control, ent.target);
            }
        }
    }
    return shot_expectation(m, state, shots_, seed_ + count_);
}

AxisModel estimate_axis_model(const Circuit& c, const PauliSum& m, std::size_t slot,
                              bool need_linear, EnergyEvaluator& eval) {
    AxisModel model;
    const auto& gates = r_element_gates();
    for (int i = 0; i < 6; ++i) {
        model.r[i] = eval.substitution_energy(c, m, slot, gates[i]);
    }
    const double rx = model.r[0], ry = model.r[1], rz = model.r[2];
    const double rxy = model.r[3], rxz = model.r[4], ryz = model.r[5];
    model.quadratic.m = {{{2.0 * rx, 2.0 * rxy - rx - ry, 2.0 * rxz - rx - rz},
                          {2.0 * rxy - rx - ry, 2.0 * ry, 2.0 * ryz - ry - rz},
                          {2.0 * rxz - rx - rz, 2.0 * ryz - ry - rz, 2.0 * rz}}};
    if (need_linear) {
        model.e_identity = eval.substitution_energy(c, m, slot, Unitary2::identity());
        const Axis axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        double b[3];
        for (int j = 0; j < 3; ++j) {
            const double quarter =
                eval.substitution_energy(c, m, slot, rotation_unitary(axes[j], M_PI / 2.0));
            b[j] = 2.0 * quarter - model.e_identity - model.r[j];
        }
        model.linear = Vec3{b[0], b[1], b[2]};
        model.has_linear = true;
    }
    return model;
}

UpdateResult pi_fraxis_update(Circuit& c, const PauliSum& m, std::size_t slot,
                              EnergyEvaluator& eval) {
    ParamGate& param = c.param_at(slot);
    const std::uint64_t before = eval.evaluations();
    const AxisModel model = estimate_axis_model(c, m, slot, false, eval);
    const EigenTriple eig = eig3_symmetric(model.quadratic);

    int chosen = 0;
    if (eig.values[1] - eig.values[0] < kDegenerateGap) {
        // Degenerate minimum: stay close to the incumbent axis to avoid churn.
        const Vec3 incumbent = to_vec(param.axis);
        double best_alignment = -1.0;
        for (int i = 0; i < 3; ++i) {
            if (eig.values[i] - eig.values[0] >= kDegenerateGap) {
                break;
            }
            const double alignment = std::abs(eig.vectors[i].dot(incumbent));
            if (alignment > best_alignment) {
                best_alignment = alignment;
                chosen = i;
            }
        }
    }
    param.axis = to_axis(eig.vectors[chosen]);
    param.theta = M_PI;
    return UpdateResult{param.axis, M_PI, 0.5 * eig.values[chosen],
                        eval.evaluations() - before};
}

namespace {

// Secular function g(lambda) = sum (sc b_i)^2 / (D_i - 2 lambda)^2 in the
// eigenbasis of R, with D_i = sin^2(t/2) lambda_i. Roots of g = 1 are the
// Lagrange multipliers of the constrained axis problem.
struct SecularProblem {
    std::array<double, 3> d{};     // s^2 lambda_i
    std::array<double, 3> beta{};  // sc * (v_i . b)

    double g(double lambda) const {
        double total = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double denom = d[i] - 2.0 * lambda;
            total += (beta[i] * beta[i]) / (denom * denom);
        }
        return total;
    }

    Vec3 axis_for(double lambda, const EigenTriple& eig) const {
        Vec3 axis{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const double coeff = -beta[i] / (d[i] - 2.0 * lambda);
            axis = axis + eig.vectors[i] * coeff;
        }
        return axis;
    }
};

// Bisection on a bracket where g - 1 changes sign; g is monotone on the
// bracket by construction (convex between poles, monotone outside).
std::optional<double> bisect_root(const SecularProblem& sp, double lo, double hi) {
    double glo = sp.g(lo) - 1.0;
    double ghi = sp.g(hi) - 1.0;
    if (glo * ghi > 0.0) {
        return std::nullopt;
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = sp.g(mid) - 1.0;
        if (std::abs(gm) < 1e-12 || hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) {
            return mid;
        }
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Walks from a pole toward `direction` until g drops below 1.
double step_off_pole(const SecularProblem& sp, double pole, double direction, double span) {
    double delta = std::max(span, 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        if (sp.g(pole + direction * delta) < 1.0) {
            return pole + direction * delta;
        }
        delta *= 2.0;
    }
    throw std::runtime_error("secular root bracketing failed to escape a pole");
}

double approach_pole(const SecularProblem& sp, double pole, double direction, double span) {
    double delta = std::max(span * 1e-3, 1e-18);
    for (int iter = 0; iter < 400; ++iter) {
        const double x = pole + direction * delta;
        if (sp.g(x) > 1.0) {
            return x;
        }
        delta *= 0.25;
        if (delta < 1e-300) {
            break;
        }
    }
    return pole + direction * delta;
}

std::vector<Vec3> axis_candidates(const AxisModel& model, double theta) {
    const double half = 0.5 * theta;
    const double s = std::sin(half);
    const double c = std::cos(half);
    const double sc = s * c;
    const EigenTriple eig = eig3_symmetric(model.quadratic);

    std::vector<Vec3> candidates;
    for (const Vec3& v : eig.vectors) {
        candidates.push_back(v);
        candidates.push_back(v * -1.0);
    }

    const double b_norm = model.linear.norm();
    if (b_norm < 1e-12 || std::abs(sc) < 1e-15) {
        return candidates;
    }

    SecularProblem sp;
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        sp.d[i] = s * s * eig.values[i];
        sp.beta[i] = sc * eig.vectors[i].dot(model.linear);
        scale = std::max(scale, std::abs(sp.d[i]));
    }
    scale = std::max(scale, std::abs(sc) * b_norm);

    const double beta_tol = 1e-12 * std::max(1.0, std::abs(sc) * b_norm);
    std::vector<double> poles;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(sp.beta[i]) > beta_tol) {
            poles.push_back(sp.d[i] / 2.0);
        }
    }
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end(),
                            [&](double a, double b) {
                                return std::abs(a - b) < 1e-14 * std::max(1.0, scale);
                            }),
                poles.end());

    std::vector<double> roots;
    if (!poles.empty()) {
        const double span = std::max(poles.back() - poles.front(), 1e-6 * std::max(1.0, scale));
        {  // left of the smallest pole: g rises from 0 to +inf
            const double lo = step_off_pole(sp, poles.front(), -1.0, span);
            const double hi = approach_pole(sp, poles.front(), -1.0, span);
            if (auto root = bisect_root(sp, lo, hi)) {
                roots.push_back(*root);
            }
        }
        {  // right of the largest pole: g falls from +inf to 0
            const double lo = approach_pole(sp, poles.back(), 1.0, span);
            const double hi = step_off_pole(sp, poles.back(), 1.0, span);
            if (auto root = bisect_root(sp, lo, hi)) {
                roots.push_back(*root);
            }
        }
        for (std::size_t k = 0; k + 1 < poles.size(); ++k) {
            // Between adjacent poles g is convex with +inf walls; locate the
            // interior minimum, then bisect each monotone half if it dips
            // below 1.
            double lo = approach_pole(sp, poles[k], 1.0, poles[k + 1] - poles[k]);
            double hi = approach_pole(sp, poles[k + 1], -1.0, poles[k + 1] - poles[k]);
            if (lo >= hi) {
                continue;
            }
            double a = lo, b = hi;
            for (int iter = 0; iter < 200; ++iter) {
                const double m1 = a + (b - a) / 3.0;
                const double m2 = b - (b - a) / 3.0;
                if (sp.g(m1) < sp.g(m2)) {
                    b = m2;
                } else {
                    a = m1;
                }
            }
            const double mid = 0.5 * (a + b);
            if (sp.g(mid) < 1.0) {
                if (auto root = bisect_root(sp, lo, mid)) {
                    roots.push_back(*root);
                }
                if (auto root = bisect_root(sp, mid, hi)) {
                    roots.push_back(*root);
                }
            }
        }
    }
    for (double root : roots) {
        const Vec3 axis = sp.axis_for(root, eig);
        const double norm = axis.norm();
        if (norm > 1e-9) {
            candidates.push_back(axis * (1.0 / norm));
        }
    }
    // Hard case: b orthogonal to an eigenvector. The multiplier sits exactly
    // at that pole position and the axis keeps a free component along it.
    for (int i = 0; i < 3; ++i) {
        if (std::abs(sp.beta[i]) > beta_tol) {
            continue;
        }
        Vec3 perp{0, 0, 0};
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
            if (j == i || std::abs(sp.beta[j]) <= beta_tol) {
                continue;
            }
            const double denom = sp.d[j] - sp.d[i];
            if (std::abs(denom) < 1e-14 * std::max(1.0, scale)) {
                ok = false;
                break;
            }
            perp = perp + eig.vectors[j] * (-sp.beta[j] / denom);
        }
        if (!ok) {
            continue;
        }
        const double perp_sq = perp.dot(perp);
        if (perp_sq <= 1.0) {
            const double free = std::sqrt(1.0 - perp_sq);
            candidates.push_back(perp + eig.vectors[i] * free);
            candidates.push_back(perp - eig.vectors[i] * free);
        }
    }
    return candidates;
}

}  // namespace

UpdateResult theta_fraxis_update(Circuit& c, const PauliSum& m, std::size_t slot, double theta,
                                 EnergyEvaluator& eval) {
    ParamGate& param = c.param_at(slot);
    const double sc = std::sin(theta / 2.0) * std::cos(theta / 2.0);
    if (std::abs(sc) < 1e-12) {
        throw std::invalid_argument(
            "theta_fraxis_update requires theta away from multiples of pi");
    }
    const std::uint64_t before = eval.evaluations();
    const AxisModel model = estimate_axis_model(c, m, slot, true, eval);

    std::vector<Vec3> candidates = axis_candidates(model, theta);
    candidates.push_back(to_vec(param.axis));  // never lose to the incumbent
    double best_energy = std::numeric_limits<double>::infinity();
    Vec3 best_axis{0, 0, 1};
    for (const Vec3& candidate : candidates) {
        const Vec3 axis = candidate.normalized();
        const double value = model.landscape(axis, theta);
        if (value < best_energy) {
            best_energy = value;
            best_axis = axis;
        }
    }
    if (!std::isfinite(best_energy)) {
        throw std::runtime_error("axis solver produced no candidates");
    }
    param.axis = to_axis(best_axis);
    param.theta = theta;
    return UpdateResult{param.axis, theta, best_energy, eval.evaluations() - before};
}

UpdateResult rotosolve_update(Circuit& c, const PauliSum& m, std::size_t slot,
                              EnergyEvaluator& eval) {
    ParamGate& param = c.param_at(slot);
    const std::uint64_t before = eval.evaluations();
    const double e_zero = eval.substitution_energy(c, m, slot, Unitary2::identity());
    const double e_plus =
        eval.substitution_energy(c, m, slot, rotation_unitary(param.axis, M_PI / 2.0));
    const double e_minus =
        eval.substitution_energy(c, m, slot, rotation_unitary(param.axis, -M_PI / 2.0));
    const Sinusoid fit = fit_sinusoid(e_zero, e_plus, e_minus);
    if (!fit.flat) {
        param.theta = fit.minimizer();
    }
    return UpdateResult{param.axis, param.theta, fit.minimum(), eval.evaluations() - before};
}

UpdateResult rotoselect_update(Circuit& c, const PauliSum& m, std::size_t slot,
                               EnergyEvaluator& eval) {
    ParamGate& param = c.param_at(slot);
    const std::uint64_t before = eval.evaluations();
    const double e_zero = eval.substitution_energy(c, m, slot, Unitary2::identity());

    const Axis axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Sinusoid best_fit;
    int best_axis = -1;
    for (int j = 0; j < 3; ++j) {
        const double e_plus =
            eval.substitution_energy(c, m, slot, rotation_unitary(axes[j], M_PI / 2.0));
        const double e_minus =
            eval.substitution_energy(c, m, slot, rotation_unitary(axes[j], -M_PI / 2.0));
        const Sinusoid fit = fit_sinusoid(e_zero, e_plus, e_minus);
        if (best_axis < 0 || fit.minimum() < best_fit.minimum()) {
            best_fit = fit;
            best_axis = j;
        }
    }
    param.axis = axes[best_axis];
    if (!best_fit.flat) {
        param.theta = best_fit.minimizer();
    }
    return UpdateResult{param.axis, param.theta, best_fit.minimum(), eval.evaluations() - before};
}

const char* method_name(Method method) {
    switch (method) {
        case Method::Rotosolve: return "rotosolve";
        case Method::Rotoselect: return "rotoselect";
        case Method::PiFraxis: return "pi-fraxis";
        case Method::ThetaFraxis: return "theta-fraxis";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    if (name == "rotosolve") return Method::Rotosolve;
    if (name == "rotoselect") return Method::Rotoselect;
    if (name == "pi-fraxis" || name == "fraxis") return Method::PiFraxis;
    if (name == "theta-fraxis") return Method::ThetaFraxis;
    throw std::invalid_argument("unknown method: " + name);
}

std::uint64_t evaluations_per_update(Method method) {
    switch (method) {
        case Method::Rotosolve: return 3;
        case Method::Rotoselect: return 7;
        case Method::PiFraxis: return 6;
        case Method::ThetaFraxis: return 10;
    }
    return 0;
}

Trajectory sweep(Circuit& c, const PauliSum& m, const SweepOptions& options,
                 EnergyEvaluator& eval) {
    Trajectory trajectory;
    const std::vector<std::size_t> slots = c.param_slots();
    if (options.max_sweeps <= 0 || slots.empty()) {
        trajectory.status = "empty";
        trajectory.final_energy = energy(c, m);
        return trajectory;
    }

    // Method-specific preparation of the incumbent parameters.
    switch (options.method) {
        case Method::PiFraxis:
            for (std::size_t slot : slots) {
                c.param_at(slot).theta = M_PI;
            }
            break;
        case Method::ThetaFraxis: {
            const double sc = std::sin(options.theta / 2.0) * std::cos(options.theta / 2.0);
            if (std::abs(sc) < 1e-12) {
                throw std::invalid_argument("theta-fraxis sweep requires theta away from "
                                            "multiples of pi; use pi-fraxis at pi");
            }
            for (std::size_t slot : slots) {
                c.param_at(slot).theta = options.theta;
            }
            break;
        }
        case Method::Rotoselect:
            // Updates choose from {x, y, z}; start inside that set so the
            // first update can only improve.
            for (std::size_t slot : slots) {
                ParamGate& param = c.param_at(slot);
                const double ax = std::abs(param.axis.x);
                const double ay = std::abs(param.axis.y);
                const double az = std::abs(param.axis.z);
                if (ax >= ay && ax >= az) param.axis = Axis{1, 0, 0};
                else if (ay >= az) param.axis = Axis{0, 1, 0};
                else param.axis = Axis{0, 0, 1};
            }
            break;
        case Method::Rotosolve:
            break;
    }

    const std::uint64_t eval_base = eval.evaluations();
    double previous = energy(c, m);
    trajectory.final_energy = previous;
    for (int sweep_index = 0; sweep_index < options.max_sweeps; ++sweep_index) {
        double last = previous;
        for (std::size_t slot : slots) {
            UpdateResult result;
            switch (options.method) {
                case Method::Rotosolve:
                    result = rotosolve_update(c, m, slot, eval);
                    break;
                case Method::Rotoselect:
                    result = rotoselect_update(c, m, slot, eval);
                    break;
                case Method::PiFraxis:
                    result = pi_fraxis_update(c, m, slot, eval);
                    break;
                case Method::ThetaFraxis:
                    result = theta_fraxis_update(c, m, slot, options.theta, eval);
                    break;
            }
            last = result.energy;
            trajectory.updates.push_back(UpdateRecord{sweep_index, slot, options.method,
                                                      result.energy, result.axis, result.theta,
                                                      result.evaluations});
        }
        trajectory.sweeps_executed = sweep_index + 1;
        trajectory.final_energy = last;
        const double improvement = previous - last;
        previous = last;
        if (options.tol > 0.0 && improvement < options.tol) {
            trajectory.status = "converged";
            trajectory.total_evaluations = eval.evaluations() - eval_base;
            return trajectory;
        }
    }
    trajectory.status = "max-sweeps";
    trajectory.total_evaluations = eval.evaluations() - eval_base;
    return trajectory;
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::ostringstream out;
    out << "sweep,slot,method,energy,nx,ny,nz,theta,evals\n";
    char buffer[256];
    for (const UpdateRecord& record : trajectory.updates) {
        std::snprintf(buffer, sizeof(buffer), "%d,%zu,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%llu\n",
                      record.sweep, record.slot, method_name(record.method), record.energy,
                      record.axis.x, record.axis.y, record.axis.z, record.theta,
                      static_cast<unsigned long long>(record.evaluations));
        out << buffer;
    }
    return out.str();
}

}  // namespace fraxis
