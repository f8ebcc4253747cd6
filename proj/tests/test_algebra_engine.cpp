#include <doctest.h>

#include <random>

#include <nonassoc/builtins.hpp>
#include <nonassoc/structure_algebra.hpp>

using namespace nonassoc;

TEST_CASE("element arithmetic is bilinear and unit acts as identity") {
    AlgebraPtr q = quaternion_algebra();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Element x = random_element(q, rng), y = random_element(q, rng),
                z = random_element(q, rng);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(Rational(3, 2) * (x * y) == (Rational(3, 2) * x) * y);
        CHECK(q->unit() * x == x);
        CHECK(x * q->unit() == x);
    }
    CHECK_THROWS_AS(q->element(RatVector(3)), input_error);
}

TEST_CASE("mul rejects mixed algebras") {
    Element a = quaternion_algebra()->basis(1);
    Element b = octonion_algebra()->basis(1);
    CHECK_THROWS_AS((void)(a * b), algebra_mismatch_error);
}

TEST_CASE("commutator, associator, star") {
    AlgebraPtr o = octonion_algebra();
    Element e1 = o->basis(1), e2 = o->basis(2), e3 = o->basis(3);
    CHECK(commutator(e1, e2) == Rational(2) * (e1 * e2));
    CHECK_FALSE(associator(e1, e2, e3).is_zero());
    CHECK(star(e1) == Rational(-1) * e1);
    CHECK(star(o->unit()) == o->unit());
    AlgebraPtr d = dual_number_algebra();
    CHECK_THROWS_AS(star(d->basis(1)), input_error);
}

TEST_CASE("powers are left-nested and exact") {
    AlgebraPtr u4 = u4_algebra();
    Element s = u4->basis(3);
    // S² = 2E + 2A, S³ = 3S, S⁴ = 6E + 6A.
    Element s2 = power(s, 2), s3 = power(s, 3), s4 = power(s, 4);
    CHECK(s2 == Rational(2) * u4->basis(0) + Rational(2) * u4->basis(2));
    CHECK(s3 == Rational(3) * s);
    CHECK(s4 == Rational(6) * u4->basis(0) + Rational(6) * u4->basis(2));
    CHECK(s2 * s2 != s4);  // non-power-associativity of the tabled algebra
}

TEST_CASE("quasi transform interpolates the product") {
    AlgebraPtr o = octonion_algebra();
    AlgebraPtr sym = jordan_transform(o);
    AlgebraPtr anti = lie_transform(o);
    CHECK(sym->is_commutative());
    // ε₁∘ε₂ = 0 (they anticommute), [ε₁,ε₂] = 2ε₄.
    Element p = sym->basis(1) * sym->basis(2);
    CHECK(p.is_zero());
    Element br = anti->basis(1) * anti->basis(2);
    CHECK(br == Rational(2) * anti->basis(4));
    // λ = μ = ½ reproduces the symmetrized constants.
    AlgebraPtr half = quasi_transform(o, Rational(1, 2), Rational(1, 2));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t k = 0; k < 8; ++k) CHECK(half->c(i, j, k) == sym->c(i, j, k));
}

TEST_CASE("lie transform of an associative algebra satisfies jacobi on basis triples") {
    AlgebraPtr lie = lie_transform(mat2_algebra());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                Element x = lie->basis(i), y = lie->basis(j), z = lie->basis(k);
                Element jac = (x * y) * z + (y * z) * x + (z * x) * y;
                CHECK(jac.is_zero());
            }
}

TEST_CASE("tensor product of quaternions with complex scalars") {
    AlgebraPtr t = tensor_product(quaternion_algebra(), complex_as_real_algebra());
    CHECK(t->dim() == 8);
    CHECK(tensor_split_identity_holds(quaternion_algebra(), complex_as_real_algebra()));
}

TEST_CASE("nucleus and center of the octonions collapse to the reals") {
    auto nuc = nucleus(octonion_algebra());
    CHECK(nuc.size() == 1);
    auto cen = center(octonion_algebra());
    CHECK(cen.size() == 1);
    // For the associative 2×2 matrix algebra the nucleus is everything.
    CHECK(nucleus(mat2_algebra()).size() == 4);
    CHECK(center(mat2_algebra()).size() == 1);
}

TEST_CASE("bilinear form solver: quaternions carry a nondegenerate trace form") {
    BilinearFormSpace f = find_associative_symmetric_forms(quaternion_algebra());
    CHECK_FALSE(f.basis.empty());
    CHECK(f.has_nondegenerate);
    REQUIRE(f.nondegenerate_witness.has_value());
    const RatMatrix& b = *f.nondegenerate_witness;
    CHECK(b == b.transpose());
    // Associativity B(xy, z) = B(x, yz) on all basis triples.
    AlgebraPtr q = quaternion_algebra();
    auto bform = [&](const Element& x, const Element& y) {
        Rational s(0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (b(i, j) != 0) s += b(i, j) * x.coeffs[i] * y.coeffs[j];
        return s;
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(bform(q->basis(i) * q->basis(j), q->basis(k)) ==
                      bform(q->basis(i), q->basis(j) * q->basis(k)));
}

TEST_CASE("idempotents and peirce decomposition") {
    AlgebraPtr u3 = u3_algebra();
    CHECK(is_idempotent(u3->basis(0)));
    auto found = idempotents_search(u3);
    CHECK_FALSE(found.empty());
    PeirceDecomposition p = peirce(u3, u3->basis(0));
    CHECK(p.fully_resolved);
    // L(E1) has eigenvalues 1 (E1), 0 (E2), ½ (S).
    std::size_t total = 0;
    for (const auto& [ev, basis] : p.eigenspaces) total += basis.size();
    CHECK(total == 3);
}

TEST_CASE("minimal polynomial of a quaternion unit") {
    AlgebraPtr q = quaternion_algebra();
    RatVector mp = minimal_polynomial(q->basis(1), 4);  // i² + 1
    REQUIRE(mp.size() == 3);
    CHECK(mp[0] == 1);
    CHECK(mp[1] == 0);
    CHECK(mp[2] == 1);
}

TEST_CASE("derivations: commutator maps of nuclear elements") {
    AlgebraPtr m = mat2_algebra();
    RatMatrix d = ad_nucleus_derivation(m->basis(1));
    CHECK(derivation_check(m, d));
    RatMatrix not_a_derivation = RatMatrix::identity(4);
    CHECK_FALSE(derivation_check(m, not_a_derivation));
    CHECK(in_nucleus(m->basis(2)));
    CHECK_FALSE(in_nucleus(octonion_algebra()->basis(1)));
}

TEST_CASE("formal reality probe finds the classical violations") {
    // d² = 0: formal violation, not semi-formal.
    RealityVerdict dual = formal_reality_probe(dual_number_algebra());
    CHECK(dual.violation_found);
    CHECK_FALSE(dual.semi_formal_violation);
    // 1² + i² = 0: both squares nonzero.
    RealityVerdict cx = formal_reality_probe(complex_as_real_algebra());
    CHECK(cx.violation_found);
    CHECK(cx.semi_formal_violation);
}

TEST_CASE("subalgebra extraction: diagonal quaternion pair inside the octonions") {
    AlgebraPtr o = octonion_algebra();
    std::vector<RatVector> span;
    for (std::size_t k : {0, 1, 2, 4}) {
        RatVector v(8, Rational(0));
        v[k] = 1;
        span.push_back(v);
    }
    CHECK(spans_subalgebra(o, span));
    AlgebraPtr sub = subalgebra(o, span, "quat-inside");
    CHECK(sub->dim() == 4);
    CHECK(sub->basis(1) * sub->basis(2) == sub->basis(3));
}
