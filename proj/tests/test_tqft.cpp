#include <doctest.h>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/tqft.hpp"
#include "spinhurwitz/verify.hpp"

using namespace spinhurwitz;

namespace {

const SpinSpectrum& spectrum_of(int d) {
    static auto source = computing_source(1);
    return source.spectrum(d);
}
const ClassAlgebra& algebra_of(int d) {
    static auto source = computing_source(1);
    return source.algebra(d);
}

Rational etale(int d, int h, Parity p) {
    HurwitzQuery q{d, h, p, ProfileList(d, {}), /*allow_formal=*/true};
    return normalized_value(q, spectrum_of(d)).normalized;
}

}  // namespace

TEST_CASE("parser builds the expected shapes") {
    auto e = parse_cobordism("cap ; cup");
    REQUIRE(std::holds_alternative<ComposeNode>(e->node));
    const auto& comp = std::get<ComposeNode>(e->node);
    CHECK(std::get<CobordismAtom>(comp.first->node).outputs == 1);
    CHECK(std::get<CobordismAtom>(comp.second->node).inputs == 1);

    auto atom = parse_cobordism("D(1,1,2,-)");
    const auto& a = std::get<CobordismAtom>(atom->node);
    CHECK(a.inputs == 1);
    CHECK(a.outputs == 1);
    CHECK(a.genus == 2);
    CHECK(a.parity == Parity::odd);

    auto nested = parse_cobordism("(cap | cap) ; pant ; cup");
    CHECK(std::holds_alternative<ComposeNode>(nested->node));
}

TEST_CASE("parser reports positions") {
    try {
        parse_cobordism("cap ;\n  wrongatom");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_cobordism("D(1,1,0,*)"), parse_error);
    CHECK_THROWS_AS(parse_cobordism("cap extra"), parse_error);
    CHECK_THROWS_AS(parse_cobordism("(cap"), parse_error);
}

TEST_CASE("identity and twist atoms") {
    for (int d = 1; d <= 3; ++d) {
        const auto& spec = spectrum_of(d);
        const int m = static_cast<int>(spec.basis.size());
        LinearMap cyl = evaluate_atom({1, 1, 0, Parity::even}, spec);
        LinearMap twist = evaluate_atom({1, 1, 0, Parity::odd}, spec);
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
                CHECK(cyl.matrix(r, c) == Rational(r == c ? 1 : 0));
            }
        }
        MatrixXq sq = twist.matrix * twist.matrix;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) CHECK(sq(r, c) == Rational(r == c ? 1 : 0));
    }
    // twist ; twist through the full evaluator
    LinearMap tt = evaluate_expr(parse_cobordism("twist ; twist"), spectrum_of(3));
    CHECK(tt.matrix == MatrixXq::Identity(2, 2));
}

TEST_CASE("unit and counit atoms") {
    const auto& spec = spectrum_of(3);
    LinearMap unit = evaluate_atom({0, 1, 0, Parity::even}, spec);
    REQUIRE(unit.matrix.rows() == 2);
    // U(1) = v_one: the basis vector at the identity partition
    CHECK(unit.matrix(spec.identity_index(), 0) == Rational(1));
    CHECK(unit.matrix(1 - spec.identity_index(), 0) == Rational(0));

    LinearMap counit = evaluate_atom({1, 0, 0, Parity::even}, spec);
    CHECK(counit.matrix(0, spec.identity_index()) ==
          Rational(BigInt(1), spec.theta_values[spec.identity_index()]));
    CHECK(counit.matrix(0, 1 - spec.identity_index()) == Rational(0));
}

TEST_CASE("closed expressions evaluate to spin Hurwitz numbers") {
    for (int d = 1; d <= 3; ++d) {
        const auto& spec = spectrum_of(d);
        auto sphere = evaluate_expr(parse_cobordism("cap ; cup"), spec);
        CHECK(sphere.is_scalar());
        CHECK(sphere.scalar() == etale(d, 0, Parity::even));

        auto torus = evaluate_expr(parse_cobordism("cap ; handle ; cup"), spec);
        CHECK(torus.scalar() == etale(d, 1, Parity::even));

        auto sphere2 = evaluate_expr(parse_cobordism("(cap | cap) ; pant ; cup"), spec);
        CHECK(sphere2.scalar() == etale(d, 0, Parity::even));

        auto odd_torus = evaluate_expr(parse_cobordism("cap ; handle ; twist ; cup"), spec);
        CHECK(odd_torus.scalar() == etale(d, 1, Parity::odd));
    }
}

TEST_CASE("composition arity errors carry position") {
    const auto& spec = spectrum_of(3);
    CHECK_THROWS_WITH_AS(evaluate_expr(parse_cobordism("cap ; pant"), spec),
                         doctest::Contains("arity mismatch"), invalid_input_error);
}

TEST_CASE("closed_value matches the engine for h <= 3") {
    for (int d = 1; d <= 3; ++d) {
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : {Parity::even, Parity::odd}) {
                CHECK(closed_value(h, p, spectrum_of(d)) == etale(d, h, p));
            }
        }
    }
    // (0,+) closed value is the total counit mass sum_slots t
    for (int d = 1; d <= 3; ++d) {
        Rational total(0);
        for (const auto& slot : spectrum_of(d).slots) total += slot.t;
        CHECK(closed_value(0, Parity::even, spectrum_of(d)) == total);
    }
}

TEST_CASE("frobenius operators") {
    for (int d = 1; d <= 3; ++d) {
        FrobeniusData frob = make_frobenius(algebra_of(d), spectrum_of(d));
        const auto& spec = spectrum_of(d);
        // A^2 = 1 and G A = A G
        CHECK(frob.parity_involution * frob.parity_involution ==
              MatrixXq::Identity(frob.m, frob.m));
        CHECK(frob.genus_adding * frob.parity_involution ==
              frob.parity_involution * frob.genus_adding);
        // G e = (1/t) e on each idempotent
        for (const auto& slot : spec.slots) {
            VectorXq e = idempotent_vector(slot, algebra_of(d));
            VectorXq ge = frob.genus_adding * e;
            for (int g = 0; g < frob.m; ++g) CHECK(ge(g) == e(g) / slot.t);
        }
    }
}

TEST_CASE("tensor evaluation is the Kronecker product") {
    const auto& spec = spectrum_of(2);
    auto left = evaluate_expr(parse_cobordism("pant"), spec);
    auto right = evaluate_expr(parse_cobordism("twist"), spec);
    auto both = evaluate_expr(parse_cobordism("pant | twist"), spec);
    CHECK(both.in_arity == 3);
    CHECK(both.out_arity == 2);
    REQUIRE(both.matrix.rows() == left.matrix.rows() * right.matrix.rows());
    for (int ra = 0; ra < left.matrix.rows(); ++ra)
        for (int ca = 0; ca < left.matrix.cols(); ++ca)
            for (int rb = 0; rb < right.matrix.rows(); ++rb)
                for (int cb = 0; cb < right.matrix.cols(); ++cb)
                    CHECK(both.matrix(ra * right.matrix.rows() + rb,
                                      ca * right.matrix.cols() + cb) ==
                          left.matrix(ra, ca) * right.matrix(rb, cb));
}
