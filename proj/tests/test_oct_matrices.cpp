#include <doctest.h>

#include <random>

#include <nonassoc/identities.hpp>
#include <nonassoc/oct_matrices.hpp>
#include <nonassoc/registry.hpp>

using namespace nonassoc;

TEST_CASE("matrix product over the octonions: identity, hermiticity of the symmetrized product") {
    OctMatrix a(3);
    a.at(0, 1) = OctonionQ::basis(1);
    a.at(1, 0) = OctonionQ::basis(1).conj();
    a.at(2, 2) = OctonionQ::scalar(Rational(2));
    CHECK(matmul(OctMatrix::identity(3), a) == a);
    CHECK(is_hermitian(a));
    CHECK(is_hermitian(jordan_matmul(a, a)));
}

TEST_CASE("permutation automorphisms square to the identity and respect products") {
    OctMatrix a(4), b(4);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t k = 0; k < 16; ++k)
        for (int c = 0; c < 8; ++c) {
            a.e[k].c[c] = coef(rng);
            b.e[k].c[c] = coef(rng);
        }
    for (int k : {1, 2, 3}) {
        CHECK(phi_automorphism(k, phi_automorphism(k, a)) == a);
    }
    // Φ₃ is an antiautomorphism-composed-with-conjugation: it preserves the
    // symmetrized product.
    CHECK(phi_automorphism(3, jordan_matmul(a, b)) ==
          jordan_matmul(phi_automorphism(3, a), phi_automorphism(3, b)));
    // Φ₁ is a genuine automorphism of the ordinary product.
    CHECK(phi_automorphism(1, matmul(a, b)) ==
          matmul(phi_automorphism(1, a), phi_automorphism(1, b)));
}

TEST_CASE("exported families have the expected dimensions and units") {
    CHECK(export_structure_algebra("H2")->dim() == 10);
    CHECK(export_structure_algebra("H3")->dim() == 27);
    CHECK(export_structure_algebra("H4")->dim() == 52);
    CHECK(export_structure_algebra("l44pp")->dim() == 20);
    CHECK(export_structure_algebra("l66pp")->dim() == 54);
    for (const char* f : {"H2", "H3", "H4", "l44pp", "l66pp"}) {
        AlgebraPtr alg = export_structure_algebra(f);
        CHECK(alg->is_commutative());
        CHECK(alg->unit_index().has_value());
        std::mt19937_64 rng(9);
        Element x = random_element(alg, rng);
        CHECK(alg->unit() * x == x);
    }
}

TEST_CASE("block-swap grading of the 4x4 family") {
    GradingReport rep = grading_check();
    CHECK(rep.spaces_hermitian);
    CHECK(rep.even_dim == 20);
    CHECK(rep.odd_dim == 32);
    CHECK(rep.even_closed);
    CHECK(rep.odd_into_even);
    CHECK(rep.mixed_into_odd);
}

TEST_CASE("fourth-power counterexample values are exact single units") {
    RuhaakReport rep = ruhaak_counterexample();
    OctonionQ e1 = OctonionQ::basis(1);
    CHECK(rep.square_square_entry == Rational(2) * e1);
    CHECK(rep.cube_times_a_starred == e1);
    CHECK(rep.distinct);
    CHECK(rep.rational_control_equal);
}

TEST_CASE("trace form: quartic compatibility on trace-zero elements") {
    TraceCompatReport rep = trace_compatibility_check(50, 1);
    CHECK(rep.unit_trace_ok);
    CHECK(rep.quartic_ok);
    CHECK(rep.trials == 50);
}

TEST_CASE("bilinear forms exist and are nondegenerate for the hermitian families") {
    for (const char* f : {"H2", "H3"}) {
        BilinearFormSpace forms = find_associative_symmetric_forms(export_structure_algebra(f));
        CHECK_FALSE(forms.basis.empty());
        CHECK(forms.has_nondegenerate);
    }
}

TEST_CASE("quartic form: quaternionic bounds and octonionic negativity") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> num(-5, 5);
    auto quat = [&]() {
        OctonionQ o;
        for (std::size_t k : {0, 1, 2, 4}) o.c[k] = num(rng);
        return o;
    };
    for (int t = 0; t < 100; ++t) {
        QInput in;
        for (int k = 0; k < 3; ++k) {
            in.x.push_back(quat());
            in.y.push_back(quat());
        }
        Rational q = q_form(in);
        CHECK(q >= 0);
        CHECK(q <= q_norm_bound(in));
    }
    auto oct = [&]() {
        OctonionQ o;
        for (std::size_t k = 0; k < 8; ++k) o.c[k] = num(rng);
        return o;
    };
    bool negative = false;
    for (int t = 0; t < 20000 && !negative; ++t) {
        QInput in;
        for (int k = 0; k < 3; ++k) {
            in.x.push_back(oct());
            in.y.push_back(oct());
        }
        try {
            negative = q_form(in) < 0;
        } catch (const non_real_result_error&) {
        }
    }
    CHECK(negative);
}

TEST_CASE("normalized quartic ratio is a quotient of norms, hence non-negative") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-4, 4);
    auto quat = [&]() {
        OctonionQ o;
        for (std::size_t k : {0, 1, 2, 4}) o.c[k] = num(rng);
        return o;
    };
    int evaluated = 0;
    for (int t = 0; t < 200; ++t) {
        OctonionQ x1 = quat(), y2 = quat();
        if ((x1 * y2).norm() == 0) continue;
        Rational q = hasse_jordan_q(x1, quat(), quat(), quat(), y2, quat());
        CHECK(q >= 0);
        ++evaluated;
    }
    CHECK(evaluated > 100);
}

TEST_CASE("oscillator factorization is exact and the embedded 2x2 cube is order-sensitive") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    auto r = [&]() { return make_rational(num(rng), den(rng)); };
    for (int t = 0; t < 25; ++t) {
        OscillatorParams p{r(), r(), r(), r(), CRational{r(), r()}, CRational{r(), r()}};
        FactorizationReport rep = biedenharn_factorization(p);
        CHECK(rep.plus_minus_ok);
        CHECK(rep.minus_plus_ok);
    }
    OscillatorParams p{Rational(1), Rational(1, 2), Rational(2, 3), Rational(1, 3),
                       CRational{Rational(1), Rational(1, 2)},
                       CRational{Rational(2), Rational(-1, 3)}};
    PowerCheckReport pc = biedenharn_power_check(p);
    CHECK(pc.non_associative);
    CHECK_FALSE(pc.left == pc.right);
}

TEST_CASE("embedding search finds the 2x2 family inside the 3x3 family") {
    // The top-left corner embedding exists; the randomized search records
    // attempts without claiming refutation on a miss.
    EmbeddingSearchReport rep =
        embedding_search(export_structure_algebra("U3"), export_structure_algebra("U3"), 50, 1);
    CHECK(rep.attempts <= 50);
}
