#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "zeno/cavity.hpp"
#include "zeno/reference.hpp"

using namespace zeno;
using C = std::complex<double>;

namespace {

// Pump-off steady intracavity signal of the reference cavity, from the
// geometric series a = r eta^2 t / (1 - r^2 eta^2).
double reference_pump_off_signal() {
    const auto p = reference::doubly_resonant();
    const double e = p.r_s * p.eta_s * p.eta_s;
    return e * p.t_s / (1.0 - e * p.r_s);
}

}  // namespace

TEST_CASE("frequency ratio") {
    CHECK(frequency_ratio(633e-9, 633e-9) == doctest::Approx(1.0));
    CHECK(frequency_ratio(633e-9, 4 * 633e-9) == doctest::Approx(2.0));
    CHECK(frequency_ratio(reference::doubly_resonant()) == doctest::Approx(1.3001).epsilon(5e-5));
}

TEST_CASE("crystal mixing") {
    const double k = 1.3001;
    SUBCASE("identity without pump") {
        const auto out = crystal_mix(C(1, 0), C(0, 0), MixingStrength(0.0), k);
        CHECK(out.signal == C(1, 0));
        CHECK(out.df == C(0, 0));
    }
    SUBCASE("quarter rotation converts all signal") {
        const auto out = crystal_mix(C(1, 0), C(0, 0), MixingStrength(std::numbers::pi / 2), k);
        CHECK(std::abs(out.signal) < 1e-15);
        CHECK(out.df.real() == doctest::Approx(-0.7692).epsilon(1e-4));
        CHECK(std::abs(out.df.imag()) < 1e-15);
    }
    SUBCASE("flux 0.7826 is kept over a grid of angles") {
        const double flux_in = 0.36 + k * k * 0.25;
        CHECK(flux_in == doctest::Approx(0.7826).epsilon(1e-4));
        for (int i = 0; i <= 64; ++i) {
            const double angle = 2.0 * std::numbers::pi * i / 64.0;
            const auto out = crystal_mix(C(0.6, 0), C(0, 0.5), MixingStrength(angle), k);
            CHECK(std::norm(out.signal) + k * k * std::norm(out.df) ==
                  doctest::Approx(flux_in).epsilon(1e-14));
        }
    }
    SUBCASE("negative strength is rejected") {
        CHECK_THROWS_AS(MixingStrength(-1e-3), InvalidArgument);
        CHECK_THROWS_AS(MixingStrength<double>::from_pump(0.022, -1.0), InvalidArgument);
    }
}

TEST_CASE("first mirror coupling") {
    const auto p = reference::doubly_resonant();
    SUBCASE("empty cavity") {
        CHECK(in_couple(IntracavityStated{}, C(1), p) == C(0.25));
        const C reflected = reflected_field(IntracavityStated{}, C(1), p);
        CHECK(reflected.real() == doctest::Approx(-0.968));
        CHECK(std::norm(reflected) == doctest::Approx(0.937).epsilon(1e-3));
    }
    SUBCASE("pump-off steady state") {
        const double a = reference_pump_off_signal();
        CHECK(a == doctest::Approx(2.1878).epsilon(1e-4));
        const IntracavityStated state{C(a), C(0)};
        CHECK(in_couple(state, C(1), p).real() == doctest::Approx(2.3678).epsilon(1e-4));
        const C reflected = reflected_field(state, C(1), p);
        CHECK(reflected.real() == doctest::Approx(-0.4211).epsilon(1e-3));
        CHECK(std::norm(reflected) == doctest::Approx(0.1773).epsilon(1e-3));
    }
    SUBCASE("no drive") {
        const IntracavityStated state{C(0.3, -0.7), C(0)};
        CHECK(std::abs(in_couple(state, C(0), p) - 0.968 * state.a_s) < 1e-15);
        CHECK(std::abs(reflected_field(state, C(0), p) - p.t_s * state.a_s) < 1e-15);
    }
}

TEST_CASE("round trip step") {
    const auto p = reference::doubly_resonant();

    SUBCASE("zero in, zero out") {
        const auto step = round_trip_step(IntracavityStated{}, C(0), 17.0, p);
        CHECK(step.next == IntracavityStated{});
        CHECK(step.ports.p_in == 0);
        CHECK(step.ports.p_t == 0);
        CHECK(step.ports.p_r == 0);
        CHECK(step.ports.p_conv == 0);
    }
    SUBCASE("pump-off steady state is a fixed point") {
        const IntracavityStated state{C(reference_pump_off_signal()), C(0)};
        const auto step = round_trip_step(state, C(1), 0.0, p);
        CHECK(std::abs(step.next.a_s - state.a_s) < 1e-12);
        CHECK(std::abs(step.next.b_d) == 0);
        CHECK(step.ports.p_conv == doctest::Approx(0.0));
    }
    SUBCASE("constant 17 W relaxes to 0.00223 transmission") {
        IntracavityStated state{C(reference_pump_off_signal()), C(0)};
        double p_t = 0;
        for (int i = 0; i < 5000; ++i) {
            const auto step = round_trip_step(state, C(1), 17.0, p);
            state = step.next;
            p_t = step.ports.p_t;
        }
        CHECK(p_t == doctest::Approx(0.00223163).epsilon(1e-5));
    }
    SUBCASE("ports follow the mirror and crystal fields") {
        const IntracavityStated state{C(0.4, 0.2), C(-0.1, 0.3)};
        const auto step = round_trip_step(state, C(1), 9.0, p);
        const C s = in_couple(state, C(1), p);
        const auto mixed = crystal_mix(s, state.b_d, MixingStrength(p.g * 3.0), frequency_ratio(p));
        CHECK(step.ports.p_conv == doctest::Approx(std::norm(s) - std::norm(mixed.signal)));
        CHECK(step.ports.p_t == doctest::Approx(std::norm(p.t_s * p.eta_s * mixed.signal)));
        CHECK(step.ports.p_r == doctest::Approx(std::norm(reflected_field(state, C(1), p))));
        CHECK(std::abs(step.next.a_s - p.r_s * p.eta_s * p.eta_s * mixed.signal) < 1e-15);
        CHECK(std::abs(step.next.b_d - p.rho_d * mixed.df) < 1e-15);
    }
    SUBCASE("back-conversion gives negative p_conv") {
        // DF-rich input flows back into the signal
        const IntracavityStated state{C(0), C(1)};
        const auto step = round_trip_step(state, C(0), 17.0, p);
        CHECK(step.ports.p_conv < 0);
    }
    SUBCASE("invalid inputs") {
        CHECK_THROWS_AS(round_trip_step(IntracavityStated{}, C(1), -1.0, p), InvalidArgument);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(round_trip_step(IntracavityStated{C(nan), C(0)}, C(1), 1.0, p), InvalidArgument);
        CHECK_THROWS_AS(round_trip_step(IntracavityStated{}, C(1), nan, p), InvalidArgument);
    }
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate(reference::doubly_resonant()));
    CHECK_NOTHROW(validate(reference::lossy_df()));
    CHECK_FALSE(lossless_mirrors(reference::doubly_resonant()));

    auto p = reference::doubly_resonant();
    p.r_s = 1.2;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("r_s"), InvalidArgument);
    p = reference::doubly_resonant();
    p.t_s = 0.3;  // r^2 + t^2 > 1
    CHECK_THROWS_AS(validate(p), InvalidArgument);
    p = reference::doubly_resonant();
    p.lambda_d = p.lambda_s;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("lambda_d"), InvalidArgument);
    p = reference::doubly_resonant();
    p.dt = 0;
    CHECK_THROWS_AS(validate(p), InvalidArgument);
    p = reference::doubly_resonant();
    p.g = -0.1;
    CHECK_THROWS_AS(validate(p), InvalidArgument);
}

TEST_CASE("property: Manley-Rowe flux is conserved by the crystal") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> ratio(0.5, 3.0);
    double worst = 0;
    for (int i = 0; i < 5000; ++i) {
        const C s = test::random_field(rng);
        const C d = test::random_field(rng);
        const double k = ratio(rng);
        const auto out = crystal_mix(s, d, MixingStrength(angle(rng)), k);
        const double in = std::norm(s) + k * k * std::norm(d);
        const double after = std::norm(out.signal) + k * k * std::norm(out.df);
        worst = std::max(worst, std::abs(after - in));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("property: lossless two-port mirror is unitary") {
    std::mt19937_64 rng(12);
    double worst = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto p = test::random_params(rng);
        const IntracavityStated state{test::random_field(rng), C(0)};
        const C a_i = test::random_field(rng);
        const double in = std::norm(state.a_s) + std::norm(a_i);
        const double out = std::norm(in_couple(state, a_i, p)) + std::norm(reflected_field(state, a_i, p));
        worst = std::max(worst, std::abs(out - in));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("property: phases enter modulo pi") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        auto p = test::random_params(rng);
        const IntracavityStated state{test::random_field(rng), test::random_field(rng)};
        const C a_i = test::random_field(rng);
        const double pump = test::random_pump(rng, p.g);
        const auto base = round_trip_step(state, a_i, pump, p);
        auto shifted = p;
        shifted.phi_s += std::numbers::pi;
        const auto s1 = round_trip_step(state, a_i, pump, shifted);
        shifted = p;
        shifted.phi_d += std::numbers::pi;
        const auto s2 = round_trip_step(state, a_i, pump, shifted);
        for (const auto& other : {s1, s2}) {
            CHECK(std::abs(other.next.a_s - base.next.a_s) < 1e-12);
            CHECK(std::abs(other.next.b_d - base.next.b_d) < 1e-12);
            CHECK(other.ports.p_t == doctest::Approx(base.ports.p_t).epsilon(1e-12));
        }
    }
}

TEST_CASE("property: no pump keeps an empty DF field empty") {
    std::mt19937_64 rng(14);
    auto p = test::random_params(rng);
    IntracavityStated state{test::random_field(rng), C(0)};
    for (int i = 0; i < 2000; ++i) {
        state = round_trip_step(state, test::random_field(rng), 0.0, p).next;
        REQUIRE(state.b_d == C(0));
    }
}

TEST_CASE("property: the map is linear in the fields") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 500; ++i) {
        const auto p = test::random_params(rng);
        const IntracavityStated state{test::random_field(rng), test::random_field(rng)};
        const C a_i = test::random_field(rng);
        const C factor = test::random_field(rng);
        const double pump = test::random_pump(rng, p.g);
        const auto base = round_trip_step(state, a_i, pump, p);
        const auto scaled =
            round_trip_step(IntracavityStated{factor * state.a_s, factor * state.b_d}, factor * a_i, pump, p);
        const double f2 = std::norm(factor);
        CHECK(std::abs(scaled.next.a_s - factor * base.next.a_s) < 1e-12);
        CHECK(std::abs(scaled.next.b_d - factor * base.next.b_d) < 1e-12);
        CHECK(scaled.ports.p_t == doctest::Approx(f2 * base.ports.p_t).epsilon(1e-12));
        CHECK(scaled.ports.p_r == doctest::Approx(f2 * base.ports.p_r).epsilon(1e-12));
        CHECK(scaled.ports.p_in == doctest::Approx(f2 * base.ports.p_in).epsilon(1e-12));
    }
}

TEST_CASE("property: stored flux balances the ports in the lossless limit") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 500; ++i) {
        auto p = test::random_params(rng);
        p.eta_s = 1;
        p.rho_d = 1;
        const IntracavityStated state{test::random_field(rng), test::random_field(rng)};
        const C a_i = test::random_field(rng);
        const auto step = round_trip_step(state, a_i, test::random_pump(rng, p.g), p);
        const double change = stored_flux(step.next, p) - stored_flux(state, p);
        CHECK(change == doctest::Approx(step.ports.p_in - step.ports.p_t - step.ports.p_r).epsilon(1e-12));
    }
}

TEST_CASE("extended precision instantiation") {
    using L = long double;
    CavityParams<L> p;
    p.r_s = 0.9L;
    p.t_s = std::sqrt(1.0L - 0.81L);
    const std::complex<L> s(0.6L, 0.1L), d(0.2L, -0.5L);
    const L k = frequency_ratio(p);
    const auto out = crystal_mix(s, d, MixingStrength<L>(1.234L), k);
    const L before = std::norm(s) + k * k * std::norm(d);
    const L after = std::norm(out.signal) + k * k * std::norm(out.df);
    CHECK(static_cast<double>(std::abs(after - before)) < 1e-17);
}
