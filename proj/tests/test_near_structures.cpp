#include <doctest.h>

#include <cmath>
#include <random>

#include <nonassoc/haehl.hpp>
#include <nonassoc/near_field.hpp>
#include <nonassoc/pnr.hpp>

using namespace nonassoc;

TEST_CASE("twisted product: near-field laws at w = 1") {
    NearFieldParams p;  // w = 1
    std::mt19937_64 rng(3);
    double left = 0, norm = 0, assoc = 0, right = 0;
    for (int t = 0; t < 2000; ++t) {
        ApproxQuaternion a = random_quaternion(rng), b = random_quaternion(rng),
                         c = random_quaternion(rng);
        left = std::max(left, distributor(b, c, a, [&](const auto& x, const auto& y) {
                                  return kalscheuer_mul(y, x, p);
                              }).abs());
        norm = std::max(norm, std::fabs(kalscheuer_mul(a, b, p).norm() - a.norm() * b.norm()) /
                                  std::max(1.0, a.norm() * b.norm()));
        assoc = std::max(assoc, quat_dist(kalscheuer_mul(kalscheuer_mul(a, b, p), c, p),
                                          kalscheuer_mul(a, kalscheuer_mul(b, c, p), p)));
        right = std::max(right, distributor(a, b, c, [&](const auto& x, const auto& y) {
                                    return kalscheuer_mul(x, y, p);
                                }).abs());
    }
    CHECK(left < 1e-10);
    CHECK(norm < 1e-10);
    CHECK(assoc < 1e-10);
    CHECK(right > 1e-3);  // one-sided distributivity only
}

TEST_CASE("twisted product reduces to the quaternions at w = 0") {
    NearFieldParams p;
    p.w = 0.0;
    std::mt19937_64 rng(5);
    double worst = 0;
    for (int t = 0; t < 2000; ++t) {
        ApproxQuaternion a = random_quaternion(rng), b = random_quaternion(rng);
        worst = std::max(worst, quat_dist(kalscheuer_mul(a, b, p), quat_mul(a, b)));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("reciprocal convention changes the twist unless w = 1") {
    NearFieldParams std_p, rec_p;
    std_p.w = rec_p.w = 2.0;
    rec_p.reciprocal_convention = true;
    ApproxQuaternion a{{1.5, 0.2, -0.3, 0.4}}, b{{0.7, 1.1, 0.0, -0.5}};
    CHECK(quat_dist(kalscheuer_mul(a, b, std_p), kalscheuer_mul(a, b, rec_p)) > 1e-6);
    std_p.w = rec_p.w = 1.0;
    CHECK(quat_dist(kalscheuer_mul(a, b, std_p), kalscheuer_mul(a, b, rec_p)) < 1e-15);
}

TEST_CASE("powers agree with repeated twisted products") {
    NearFieldParams p;
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        ApproxQuaternion a = random_quaternion(rng);
        if (a.norm() < 1e-3) continue;
        ApproxQuaternion via_mul = kalscheuer_mul(kalscheuer_mul(a, a, p), a, p);
        CHECK(quat_dist(kalscheuer_power(a, 3, p), via_mul) < 1e-8);
    }
}

TEST_CASE("limit product oscillates for generic inputs at w = 1") {
    NearFieldParams p;
    std::vector<double> lambdas;
    for (int k = 1; k <= 40; ++k) lambdas.push_back(1.0 / k);
    ApproxQuaternion a{{1.3, 0.4, -0.7, 0.2}}, b{{0.5, -1.1, 0.6, 0.9}};
    LimitProbeReport rep = limit_product_probe(a, b, p, lambdas);
    CHECK_FALSE(rep.converged);
    // At w = 0 the same probe converges (the product is the quaternion one).
    NearFieldParams p0;
    p0.w = 0.0;
    CHECK(limit_product_probe(a, b, p0, lambdas).converged);
}

TEST_CASE("kernel and center probes") {
    NearFieldParams p;
    // Complex-subfield candidates distribute (kernel evidence).
    ApproxQuaternion c{{0.8, 0.6, 0.0, 0.0}};  // in span(1, i_axis)
    KernelCenterReport rep = kernel_center_probe(p, c, 200, 1);
    CHECK(rep.kernel_residual < 1e-10);
    // Structured candidates commute; plain rational 2 does not.
    ApproxQuaternion cc = center_candidate(2.0, p);
    KernelCenterReport rep2 = kernel_center_probe(p, cc, 200, 1);
    CHECK(rep2.center_residual < 1e-10);
    RationalCenterWitness w = rational_two_center_witness(p, 200, 1);
    CHECK(w.found);
    CHECK(w.commutator_norm > 1e-3);
}

TEST_CASE("twisted matrix product validates its generator and twists by the determinant") {
    DMatrix mu = default_twist_generator(4);
    CHECK_NOTHROW(validate_twist_generator(mu));
    TwistedMatrixParams p;
    p.mu = mu;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    DMatrix a(4), b(4);
    for (std::size_t k = 0; k < 16; ++k) {
        a.a[k] = d(rng);
        b.a[k] = d(rng);
    }
    DMatrix ab = twisted_matrix_mul(a, b, p);
    CHECK(std::isfinite(ab.max_abs()));
    // A generator violating the spectrum requirement is rejected.
    DMatrix bad(4);
    bad(0, 0) = 1.0;
    CHECK_THROWS_AS(validate_twist_generator(bad), spectrum_violation_error);
}

TEST_CASE("octonion twist keeps the norm multiplicative") {
    TwistedOctonionParams p;
    std::mt19937_64 rng(13);
    double worst = 0;
    for (int t = 0; t < 500; ++t) {
        ApproxOctonion a = random_octonion(rng), b = random_octonion(rng);
        worst = std::max(worst, std::fabs(twisted_octonion_mul(a, b, p).norm() -
                                          a.norm() * b.norm()) /
                                    std::max(1.0, a.norm() * b.norm()));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("8-dim quasi-field: identity kink reproduces the octonions") {
    HaehlParams p;  // alpha = 1, rho = id
    double worst = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Vec8 a{}, x{};
            a[i] = 1.0;
            x[j] = 1.0;
            ApproxOctonion lhs = haehl_to_octonion(haehl_mul(a, x, p));
            ApproxOctonion rhs = oct_mul(haehl_to_octonion(a), haehl_to_octonion(x));
            worst = std::max(worst, (lhs - rhs).abs());
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("8-dim quasi-field: coordinate map round trips") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
        Vec8 a{};
        for (auto& c : a) c = d(rng);
        Vec8 back = octonion_to_haehl(haehl_to_octonion(a));
        CHECK(vec8_max_abs(vec8_sub(a, back)) < 1e-15);
    }
}

TEST_CASE("cubic kink: left distributive, right distributivity broken") {
    HaehlParams p;
    p.rho = RhoFamily::Cubic;
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    double left = 0, right = 0;
    for (int t = 0; t < 300; ++t) {
        Vec8 a{}, x{}, y{};
        for (auto& c : a) c = d(rng);
        for (auto& c : x) c = d(rng);
        for (auto& c : y) c = d(rng);
        left = std::max(left, vec8_max_abs(vec8_sub(haehl_mul(a, vec8_add(x, y), p),
                                                    vec8_add(haehl_mul(a, x, p),
                                                             haehl_mul(a, y, p)))));
        right = std::max(right, vec8_max_abs(vec8_sub(haehl_mul(vec8_add(a, x), y, p),
                                                      vec8_add(haehl_mul(a, y, p),
                                                               haehl_mul(x, y, p)))));
    }
    CHECK(left < 1e-12);
    CHECK(right > 1e-3);
}

TEST_CASE("kink family names resolve") {
    CHECK(rho_family_from_name("id") == RhoFamily::Identity);
    CHECK(rho_family_from_name("t3") == RhoFamily::Cubic);
    CHECK(rho_family_from_name("piecewise") == RhoFamily::PiecewiseLinear);
    CHECK_THROWS_AS(rho_family_from_name("zig"), input_error);
}

TEST_CASE("word arithmetic: reduction, non-commutative addition, subtraction") {
    PNRElement x = pnr_monomial(Rational(1), 1);
    PNRElement y = pnr_monomial(Rational(2), 1);
    PNRElement merged = pnr_add(x, y);  // adjacent equal exponents merge
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].coef == 3);
    PNRElement a = pnr_add(x, pnr_monomial(Rational(1), 2));
    PNRElement b = pnr_add(pnr_monomial(Rational(1), 2), x);
    CHECK_FALSE(a == b);  // word order matters
    CHECK(pnr_sub(a, a) == pnr_zero());
    CHECK_THROWS_AS(pnr_monomial(Rational(1), -1), input_error);
}

TEST_CASE("word product: right distributive and associative, zero annihilates") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        PNRElement f = random_pnr_word(rng), g = random_pnr_word(rng), h = random_pnr_word(rng);
        CHECK(pnr_mul(pnr_add(f, g), h) == pnr_add(pnr_mul(f, h), pnr_mul(g, h)));
        CHECK(pnr_mul(pnr_mul(f, g), h) == pnr_mul(f, pnr_mul(g, h)));
        CHECK(pnr_mul(f, pnr_zero()) == pnr_zero());
    }
}

TEST_CASE("left distributivity holds for powers of the generator, not in general") {
    PNRElement f = pnr_add(pnr_monomial(Rational(1), 1), pnr_monomial(Rational(1), 2));
    PNRElement g = pnr_monomial(Rational(1), 1);
    PNRDistributivityReport rep = pnr_generator_left_distributive_check(2, f, g, 200, 1);
    CHECK(rep.generator_distributes);
    CHECK(rep.failure_found);
}

TEST_CASE("group-power semantics: integer-scaled left factors do not distribute") {
    // The left coefficient 2 repeats the right word; (f+g)(f+g) differs as a
    // word from ff followed by gg, so left distributivity fails.
    PNRElement two_x = pnr_monomial(Rational(2), 1);
    PNRElement f = pnr_monomial(Rational(1), 2);
    PNRElement g = pnr_monomial(Rational(1), 1);
    PNRElement lhs = pnr_mul(two_x, pnr_add(f, g));
    PNRElement rhs = pnr_add(pnr_mul(two_x, f), pnr_mul(two_x, g));
    CHECK_FALSE(lhs == rhs);
}
