#pragma once

// Single round-trip field map of a doubly resonant Fabry-Perot cavity with an
// intracavity chi(2) crystal. Fields are complex amplitudes normalized so that
// a unit-magnitude incident field carries unit input power; the map is
// quasi-static (pump power constant over one round trip).
//
// Reference plane for the state is the first (input) mirror:
//
//   a_i --> |M1| --s'--> [crystal: mix] --s''--> eta, phi --> |M2| --> transmitted
//   a_r <-- |M1| <------------------- eta, phi <------------------ (r_s)
//
// The DF field is stored just after its reflection at M1 (b_d = r_D A_D), so
// only the measured round-trip survival rho_d = r_D^2 eta_D^2 enters.

#include <cmath>
#include <complex>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar = double>
struct CavityParams {
    Scalar r_s = 0;       ///< mirror amplitude reflection, signal
    Scalar t_s = 1;       ///< mirror amplitude transmission, signal
    Scalar eta_s = 1;     ///< single-pass amplitude transmission, signal
    Scalar rho_d = 0;     ///< DF amplitude survival per round trip
    Scalar phi_s = 0;     ///< single-pass signal detuning [rad]
    Scalar phi_d = 0;     ///< single-pass DF detuning [rad]
    Scalar g = 0;         ///< mixing gain [rad / sqrt(W)]
    Scalar lambda_s = Scalar(633e-9);
    Scalar lambda_d = Scalar(1070e-9);
    Scalar dt = Scalar(2.0 * (20e-3 + 2.2 * 5e-3) / 299792458.0);  ///< round-trip time [s]

    friend bool operator==(const CavityParams&, const CavityParams&) = default;
};

using CavityParamsd = CavityParams<double>;

/// Tolerance on r_s^2 + t_s^2 <= 1 (mirrors may not create power).
inline constexpr double kMirrorTolerance = 1e-12;

/// Throws InvalidArgument naming the first violated invariant.
template <typename Scalar>
void validate(const CavityParams<Scalar>& p) {
    auto fail = [](const char* field, const char* bound) {
        throw InvalidArgument(std::string(field) + " violates " + bound);
    };
    auto finite = [](Scalar v) { return std::isfinite(static_cast<double>(v)); };
    const Scalar pi = std::numbers::pi_v<Scalar>;

    if (!finite(p.r_s) || p.r_s < 0 || p.r_s > 1) fail("r_s", "0 <= r_s <= 1");
    if (!finite(p.t_s) || p.t_s < 0 || p.t_s > 1) fail("t_s", "0 <= t_s <= 1");
    if (p.r_s * p.r_s + p.t_s * p.t_s > 1 + Scalar(kMirrorTolerance))
        fail("r_s", "r_s^2 + t_s^2 <= 1");
    if (!finite(p.eta_s) || p.eta_s < 0 || p.eta_s > 1) fail("eta_s", "0 <= eta_s <= 1");
    if (!finite(p.rho_d) || p.rho_d < 0 || p.rho_d > 1) fail("rho_d", "0 <= rho_d <= 1");
    if (!finite(p.phi_s) || p.phi_s < -pi || p.phi_s > pi) fail("phi_s", "-pi <= phi_s <= pi");
    if (!finite(p.phi_d) || p.phi_d < -pi || p.phi_d > pi) fail("phi_d", "-pi <= phi_d <= pi");
    if (!finite(p.g) || p.g < 0) fail("g", "g >= 0");
    if (!finite(p.lambda_s) || p.lambda_s <= 0) fail("lambda_s", "lambda_s > 0");
    if (!finite(p.lambda_d) || p.lambda_d <= p.lambda_s) fail("lambda_d", "lambda_d > lambda_s");
    if (!finite(p.dt) || p.dt <= 0) fail("dt", "dt > 0");
}

/// True when the mirrors are exactly lossless (r_s^2 + t_s^2 = 1 within 1e-12).
template <typename Scalar>
bool lossless_mirrors(const CavityParams<Scalar>& p) {
    return std::abs(p.r_s * p.r_s + p.t_s * p.t_s - 1) <= Scalar(kMirrorTolerance);
}

template <typename Scalar = double>
struct IntracavityState {
    Complex<Scalar> a_s{};  ///< signal at M1, before reflection
    Complex<Scalar> b_d{};  ///< DF just after reflection at M1

    friend bool operator==(const IntracavityState&, const IntracavityState&) = default;
};

using IntracavityStated = IntracavityState<double>;

/// Interaction angle g*sqrt(I_P). Non-negative by construction.
template <typename Scalar = double>
class MixingStrength {
public:
    constexpr MixingStrength() = default;
    explicit MixingStrength(Scalar g_prime) : g_prime_(g_prime) {
        if (!(g_prime >= 0) || !std::isfinite(static_cast<double>(g_prime)))
            throw InvalidArgument("mixing strength must be finite and >= 0");
    }

    static MixingStrength from_pump(Scalar g, Scalar pump_power) {
        if (!(pump_power >= 0) || !std::isfinite(static_cast<double>(pump_power)))
            throw InvalidArgument("pump power must be finite and >= 0");
        return MixingStrength(g * std::sqrt(pump_power));
    }

    Scalar value() const noexcept { return g_prime_; }

private:
    Scalar g_prime_ = 0;
};

template <typename Scalar = double>
struct PortSnapshot {
    Scalar p_in = 0;
    Scalar p_t = 0;
    Scalar p_r = 0;
    Scalar p_conv = 0;  ///< signal flux lost to DF in the crystal; negative on back-conversion
};

template <typename Scalar>
Scalar frequency_ratio(Scalar lambda_s, Scalar lambda_d) {
    return std::sqrt(lambda_d / lambda_s);
}

/// sqrt(omega_s / omega_d) = sqrt(lambda_d / lambda_s).
template <typename Scalar>
Scalar frequency_ratio(const CavityParams<Scalar>& p) {
    return frequency_ratio(p.lambda_s, p.lambda_d);
}

template <typename Scalar>
struct MixedFields {
    Complex<Scalar> signal;
    Complex<Scalar> df;
};

/// Undepleted-pump, phase-matched three-wave mixing through the crystal.
/// Conserves |signal|^2 + k^2 |df|^2.
template <typename Scalar>
MixedFields<Scalar> crystal_mix(Complex<Scalar> signal, Complex<Scalar> df,
                                MixingStrength<Scalar> strength, Scalar k) {
    const Scalar c = std::cos(strength.value());
    const Scalar s = std::sin(strength.value());
    return {signal * c + k * s * df, df * c - (s / k) * signal};
}

/// Signal field just inside M1: r_s a_s + t_s a_i.
template <typename Scalar>
Complex<Scalar> in_couple(const IntracavityState<Scalar>& state, Complex<Scalar> a_i,
                          const CavityParams<Scalar>& p) {
    return state.a_s * p.r_s + a_i * p.t_s;
}

/// Field leaving M1 towards the source: t_s a_s - r_s a_i.
template <typename Scalar>
Complex<Scalar> reflected_field(const IntracavityState<Scalar>& state, Complex<Scalar> a_i,
                                const CavityParams<Scalar>& p) {
    return state.a_s * p.t_s - a_i * p.r_s;
}

/// Every complex field produced during one round trip.
template <typename Scalar>
struct RoundTripFields {
    Complex<Scalar> coupled;      ///< signal after M1
    Complex<Scalar> mixed_s;      ///< signal after the crystal
    Complex<Scalar> mixed_d;      ///< DF after the crystal
    Complex<Scalar> transmitted;  ///< signal leaving M2
    Complex<Scalar> reflected;    ///< signal leaving M1
    IntracavityState<Scalar> next;
};

template <typename Scalar>
RoundTripFields<Scalar> propagate(const IntracavityState<Scalar>& state, Complex<Scalar> a_i,
                                  MixingStrength<Scalar> strength, const CavityParams<Scalar>& p) {
    const Complex<Scalar> pass_s = std::polar(p.eta_s, p.phi_s);
    const Complex<Scalar> round_s = p.r_s * pass_s * pass_s;
    const Complex<Scalar> round_d = std::polar(p.rho_d, 2 * p.phi_d);

    RoundTripFields<Scalar> f;
    f.coupled = in_couple(state, a_i, p);
    f.reflected = reflected_field(state, a_i, p);
    const auto mixed = crystal_mix(f.coupled, state.b_d, strength, frequency_ratio(p));
    f.mixed_s = mixed.signal;
    f.mixed_d = mixed.df;
    f.transmitted = p.t_s * pass_s * f.mixed_s;
    f.next.a_s = round_s * f.mixed_s;
    f.next.b_d = round_d * f.mixed_d;
    return f;
}

template <typename Scalar>
struct StepResult {
    IntracavityState<Scalar> next;
    PortSnapshot<Scalar> ports;
};

/// Advances the cavity by one round trip at pump power `pump_power` [W].
template <typename Scalar>
StepResult<Scalar> round_trip_step(const IntracavityState<Scalar>& state, Complex<Scalar> a_i,
                                   Scalar pump_power, const CavityParams<Scalar>& p) {
    auto finite = [](Complex<Scalar> z) {
        return std::isfinite(static_cast<double>(z.real())) &&
               std::isfinite(static_cast<double>(z.imag()));
    };
    if (!finite(state.a_s) || !finite(state.b_d) || !finite(a_i))
        throw InvalidArgument("round_trip_step: non-finite field");

    const auto f = propagate(state, a_i, MixingStrength<Scalar>::from_pump(p.g, pump_power), p);
    StepResult<Scalar> out;
    out.next = f.next;
    out.ports.p_in = std::norm(a_i);
    out.ports.p_t = std::norm(f.transmitted);
    out.ports.p_r = std::norm(f.reflected);
    out.ports.p_conv = std::norm(f.coupled) - std::norm(f.mixed_s);
    return out;
}

/// Photon flux stored in the cavity, in signal units: |a_s|^2 + k^2 |b_d|^2.
/// With eta_s = rho_d = 1 and lossless mirrors, one step changes it by
/// exactly p_in - p_t - p_r.
template <typename Scalar>
Scalar stored_flux(const IntracavityState<Scalar>& state, const CavityParams<Scalar>& p) {
    const Scalar k = frequency_ratio(p);
    return std::norm(state.a_s) + k * k * std::norm(state.b_d);
}

}  // namespace zeno
