#pragma once

// Constant-pump steady state of the round-trip map with unit CW drive.
//
// Three routes are provided:
//   closed_form_resonant  - printed doubly resonant expressions (phi_s = phi_d = 0)
//   general_steady_state  - direct 2x2 complex solve of the fixed point, any detuning
//   fixed_point_oracle    - brute-force iteration of the map, for verification

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeno/cavity.hpp"
#include "zeno/errors.hpp"

namespace zeno {

template <typename Scalar = double>
struct SteadyStateSolution {
    Complex<Scalar> t_cavity{};
    Complex<Scalar> r_cavity{};
    Complex<Scalar> a_s{};
    Complex<Scalar> b_d{};

    Scalar transmission() const { return std::norm(t_cavity); }
    Scalar reflection() const { return std::norm(r_cavity); }
};

using SteadyStateSolutiond = SteadyStateSolution<double>;

namespace detail {

template <typename Scalar>
SteadyStateSolution<Scalar> solution_from_state(const IntracavityState<Scalar>& state,
                                                MixingStrength<Scalar> strength,
                                                const CavityParams<Scalar>& p) {
    const auto f = propagate(state, Complex<Scalar>(1), strength, p);
    return {f.transmitted, f.reflected, state.a_s, state.b_d};
}

}  // namespace detail

/// Steady intracavity fields and port coefficients at fixed interaction angle.
///
/// Unknowns x = (a_s, b_d) satisfy x = step(x) with a_i = 1:
///
///   a_s = E_s (cos g' (r_s a_s + t_s) + k sin g' b_d)
///   b_d = E_d (cos g' b_d - sin g' / k (r_s a_s + t_s))
///
/// with E_s = r_s eta_s^2 e^{2i phi_s}, E_d = rho_d e^{2i phi_d}.
template <typename Scalar>
SteadyStateSolution<Scalar> general_steady_state(const CavityParams<Scalar>& p,
                                                 MixingStrength<Scalar> strength) {
    using C = Complex<Scalar>;
    const Scalar c = std::cos(strength.value());
    const Scalar s = std::sin(strength.value());
    const Scalar k = frequency_ratio(p);
    const C e_s = p.r_s * std::polar(p.eta_s * p.eta_s, 2 * p.phi_s);
    const C e_d = std::polar(p.rho_d, 2 * p.phi_d);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();

    IntracavityState<Scalar> state;
    if (s == 0) {
        // DF decoupled; it carries no drive and relaxes to zero.
        const C denom = C(1) - e_s * c * p.r_s;
        if (std::abs(denom) <= 8 * eps)
            throw SingularSystem("general_steady_state: signal resonance pole");
        state.a_s = e_s * c * p.t_s / denom;
    } else {
        Eigen::Matrix<C, 2, 2> m;
        m << C(1) - e_s * c * p.r_s, -e_s * k * s,
             e_d * s * p.r_s / k,     C(1) - e_d * c;
        Eigen::Matrix<C, 2, 1> rhs;
        rhs << e_s * c * p.t_s, -e_d * s * p.t_s / k;

        const C det = m.determinant();
        const Scalar scale = std::abs(m(0, 0) * m(1, 1)) + std::abs(m(0, 1) * m(1, 0));
        if (!(std::abs(det) > 8 * eps * scale))
            throw SingularSystem("general_steady_state: singular 2x2 system (cavity pole)");
        const Eigen::Matrix<C, 2, 1> x = m.inverse() * rhs;
        state.a_s = x(0);
        state.b_d = x(1);
    }
    return detail::solution_from_state(state, strength, p);
}

template <typename Scalar>
SteadyStateSolution<Scalar> general_steady_state(const CavityParams<Scalar>& p, Scalar pump_power) {
    return general_steady_state(p, MixingStrength<Scalar>::from_pump(p.g, pump_power));
}

/// Printed doubly resonant expressions:
///
///   t = t_s^2 eta_s (cos g' - rho_d) / D
///   r = -r_s (1 - eta_s^2 cos g' - rho_d cos g' + rho_d eta_s^2) / D
///   D = 1 - r_s^2 eta_s^2 cos g' - rho_d cos g' + r_s^2 rho_d eta_s^2
///
/// The r expression assumes r_s^2 + t_s^2 = 1; with lossy mirrors it differs
/// from the reflection of the solved fields. a_s and b_d come from the linear solve.
template <typename Scalar>
SteadyStateSolution<Scalar> closed_form_resonant(const CavityParams<Scalar>& p,
                                                 MixingStrength<Scalar> strength) {
    if (p.phi_s != 0 || p.phi_d != 0)
        throw InvalidArgument("closed_form_resonant requires phi_s = phi_d = 0");
    const Scalar c = std::cos(strength.value());
    const Scalar eta2 = p.eta_s * p.eta_s;
    const Scalar r2 = p.r_s * p.r_s;
    const Scalar rho = p.rho_d;
    const Scalar denom = 1 - r2 * eta2 * c - rho * c + r2 * rho * eta2;
    if (std::abs(denom) <= 8 * std::numeric_limits<Scalar>::epsilon())
        throw SingularSystem("closed_form_resonant: vanishing denominator");

    SteadyStateSolution<Scalar> out = general_steady_state(p, strength);
    out.t_cavity = p.t_s * p.t_s * p.eta_s * (c - rho) / denom;
    out.r_cavity = -p.r_s * (1 - eta2 * c - rho * c + rho * eta2) / denom;
    return out;
}

template <typename Scalar>
SteadyStateSolution<Scalar> closed_form_resonant(const CavityParams<Scalar>& p, Scalar pump_power) {
    return closed_form_resonant(p, MixingStrength<Scalar>::from_pump(p.g, pump_power));
}

template <typename Scalar = double>
struct FixedPointResult {
    SteadyStateSolution<Scalar> solution;
    std::size_t iterations = 0;
    Scalar residual = 0;
};

/// Iterates the round-trip map from an empty cavity until successive states
/// differ by less than `tol` (max-norm over both fields).
template <typename Scalar>
FixedPointResult<Scalar> fixed_point_oracle(const CavityParams<Scalar>& p,
                                            MixingStrength<Scalar> strength, Scalar tol,
                                            std::size_t max_iter) {
    if (!(tol > 0)) throw InvalidArgument("fixed_point_oracle: tol must be > 0");
    IntracavityState<Scalar> state;
    Scalar residual = std::numeric_limits<Scalar>::infinity();
    for (std::size_t it = 1; it <= max_iter; ++it) {
        const auto next = propagate(state, Complex<Scalar>(1), strength, p).next;
        residual = std::max(std::abs(next.a_s - state.a_s), std::abs(next.b_d - state.b_d));
        state = next;
        if (!std::isfinite(static_cast<double>(residual))) break;
        if (residual < tol)
            return {detail::solution_from_state(state, strength, p), it, residual};
    }
    throw NonConvergence("fixed_point_oracle: no convergence, residual " + std::to_string(residual),
                         max_iter, static_cast<double>(residual));
}

template <typename Scalar>
FixedPointResult<Scalar> fixed_point_oracle(const CavityParams<Scalar>& p, Scalar pump_power,
                                            Scalar tol, std::size_t max_iter) {
    return fixed_point_oracle(p, MixingStrength<Scalar>::from_pump(p.g, pump_power), tol, max_iter);
}

/// Off/on transmitted power ratio |t(0)|^2 / |t(I_P)|^2; +inf when fully switched.
template <typename Scalar>
Scalar power_contrast(const CavityParams<Scalar>& p, Scalar pump_power) {
    const Scalar off = general_steady_state(p, Scalar(0)).transmission();
    const Scalar on = general_steady_state(p, pump_power).transmission();
    if (on == 0) return std::numeric_limits<Scalar>::infinity();
    return off / on;
}

template <typename Scalar = double>
struct SweepPoint {
    Scalar pump_power = 0;
    std::optional<Scalar> rel_transmission;  ///< empty when the solve failed
    std::string error;
};

/// |t(I_P)|^2 / |t(0)|^2 per power, in input order. A failing point carries
/// its error message and does not stop the sweep.
template <typename Scalar>
std::vector<SweepPoint<Scalar>> power_sweep(const CavityParams<Scalar>& p,
                                            std::span<const Scalar> powers) {
    std::vector<SweepPoint<Scalar>> out;
    out.reserve(powers.size());

    std::optional<Scalar> reference;
    std::string reference_error;
    try {
        reference = general_steady_state(p, Scalar(0)).transmission();
        if (*reference == 0) {
            reference.reset();
            reference_error = "pump-off transmission is zero";
        }
    } catch (const std::exception& e) {
        reference_error = e.what();
    }

    for (const Scalar watts : powers) {
        SweepPoint<Scalar> point;
        point.pump_power = watts;
        if (!reference) {
            point.error = reference_error;
        } else {
            try {
                point.rel_transmission = general_steady_state(p, watts).transmission() / *reference;
            } catch (const std::exception& e) {
                point.error = e.what();
            }
        }
        out.push_back(std::move(point));
    }
    return out;
}

}  // namespace zeno
