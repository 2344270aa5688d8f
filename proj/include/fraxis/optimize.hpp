#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fraxis/circuit.hpp"
#include "fraxis/hamiltonian.hpp"

namespace fraxis {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    Vec3 normalized() const;
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

/// Symmetric 3x3 matrix, row-major.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 apply(const Vec3& v) const;
    double quadratic_form(const Vec3& v) const;  // v^T M v
};

struct EigenTriple {
    std::array<double, 3> values{};  // ascending
    std::array<Vec3, 3> vectors{};   // orthonormal, matching order
};

/// Cyclic Jacobi diagonalization. Deterministic: eigenvalues ascend and the
/// first component of each eigenvector above 1e-12 in magnitude is positive.
EigenTriple eig3_symmetric(const Mat3& r);

/// Quadratic and linear coefficients of the single-gate energy landscape:
///   E(n, theta) = cos^2(t/2) e_identity
///               + sin(t/2) cos(t/2) (b . n)
///               + sin^2(t/2) (n^T R n) / 2.
/// The six r elements come from substituting the Hermitian gates
/// X, Y, Z, (X+Y)/sqrt2, (X+Z)/sqrt2, (Y+Z)/sqrt2; b_j stores the real scalar
/// i tr(M [rho, sigma_j]) so all solver arithmetic stays real.
struct AxisModel {
    std::array<double, 6> r{};  // rx, ry, rz, r(x+y), r(x+z), r(y+z)
    Mat3 quadratic;             // R
    bool has_linear = false;
    Vec3 linear{};      // b
    double e_identity = 0.0;

    /// n^T R n / 2; the full landscape at theta = pi.
    double landscape_pi(const Vec3& axis) const;

    /// Landscape at arbitrary theta; requires has_linear.
    double landscape(const Vec3& axis, double theta) const;
};

/// Counts substitution evaluations and selects exact or shot-based energies.
/// In shot mode each evaluation draws a fresh derived stream, so a run is
/// reproducible for a fixed (shots, seed).
class EnergyEvaluator {
  public:
    static EnergyEvaluator exact();
    static EnergyEvaluator with_shots(std::uint64_t shots, std::uint64_t seed);

    double substitution_energy(const Circuit& c, const PauliSum& m, std::size_t slot,
                               const Unitary2& u);

    std::uint64_t evaluations() const { return count_; }
    bool exact_mode() const { return shots_ == 0; }

  private:
    EnergyEvaluator(std::uint64_t shots, std::uint64_t seed) : shots_(shots), seed_(seed) {}

    std::uint64_t shots_ = 0;  // 0 = exact
    std::uint64_t seed_ = 0;
    std::uint64_t count_ = 0;
};

/// Measures the local landscape of one Param slot. Six evaluations, or ten
/// when the linear part is requested (identity run plus one quarter rotation
/// per Cartesian axis).
AxisModel estimate_axis_model(const Circuit& c, const PauliSum& m, std::size_t slot,
                              bool need_linear, EnergyEvaluator& eval);

struct UpdateResult {
    Axis axis;
    double theta = 0.0;
    double energy = 0.0;
    std::uint64_t evaluations = 0;
};

/// Sets the slot to the minimum-eigenvalue axis of R at theta = pi.
UpdateResult pi_fraxis_update(Circuit& c, const PauliSum& m, std::size_t slot,
                              EnergyEvaluator& eval);

/// Optimal axis for a fixed angle. theta must not be a multiple of pi
/// (use pi_fraxis_update at pi). Solves the constrained stationarity system
///   (sin^2(t/2) R - 2 lambda I) n = -sin(t/2)cos(t/2) b,  |n| = 1
/// by locating every real root of the secular equation with bracketed
/// bisection and scoring each candidate axis on the measured landscape.
UpdateResult theta_fraxis_update(Circuit& c, const PauliSum& m, std::size_t slot, double theta,
                                 EnergyEvaluator& eval);

/// One-angle sinusoid fit through E(0), E(+pi/2), E(-pi/2); axis unchanged.
UpdateResult rotosolve_update(Circuit& c, const PauliSum& m, std::size_t slot,
                              EnergyEvaluator& eval);

/// Rotosolve minimum over axes {x, y, z}; seven evaluations (E(0) shared).
/// Ties keep the earliest axis in x, y, z order.
UpdateResult rotoselect_update(Circuit& c, const PauliSum& m, std::size_t slot,
                               EnergyEvaluator& eval);

enum class Method { Rotosolve, Rotoselect, PiFraxis, ThetaFraxis };

const char* method_name(Method method);
Method method_from_name(const std::string& name);

/// Substitution evaluations consumed by one gate update of each method.
std::uint64_t evaluations_per_update(Method method);

struct SweepOptions {
    Method method = Method::PiFraxis;
    double theta = M_PI / 2;  // fixed angle for ThetaFraxis
    int max_sweeps = 100;
    double tol = 1e-8;  // per-sweep improvement threshold; 0 disables early stop
};

struct UpdateRecord {
    int sweep = 0;
    std::size_t slot = 0;
    Method method = Method::PiFraxis;
    double energy = 0.0;
    Axis axis;
    double theta = 0.0;
    std::uint64_t evaluations = 0;
};

struct Trajectory {
    std::vector<UpdateRecord> updates;
    std::string status;  // "converged", "max-sweeps" or "empty"
    double final_energy = 0.0;
    std::uint64_t total_evaluations = 0;
    int sweeps_executed = 0;
};

/// Sequential coordinate descent over all Param slots in application order.
/// PiFraxis forces every angle to pi before the first update; ThetaFraxis
/// forces them to the fixed angle. Stops after max_sweeps or when a full
/// sweep improves the energy by less than tol.
Trajectory sweep(Circuit& c, const PauliSum& m, const SweepOptions& options,
                 EnergyEvaluator& eval);

/// CSV with header "sweep,slot,method,energy,nx,ny,nz,theta,evals".
std::string trajectory_csv(const Trajectory& trajectory);

}  // namespace fraxis
