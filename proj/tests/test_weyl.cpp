#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcone/weyl.hpp"

using namespace fcone::weyl;

namespace {

DiffOp random_op(unsigned n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> pick(0, n - 1);
    DiffOp op(n);
    for (int t = 0; t < 3; ++t) {
        Exponents mono(n, 0), deriv(n, 0);
        mono[pick(rng)] += 1;
        mono[pick(rng)] += 1;
        deriv[pick(rng)] += 1;
        const int c = coef(rng);
        if (c == 0) continue;
        DiffOp term(n);
        term.add_term(deriv, MultiPoly::monomial(n, mono, c));
        op += term;
    }
    return op;
}

} // namespace

TEST_CASE("apply basics") {
    const unsigned n = 3;
    auto sig = SignatureVec::split(2, 1);
    // d1 applied to x1^2 -> 2 x1
    auto d0 = DiffOp::partial(n, 0);
    auto u = MultiPoly::variable(n, 0).pow(2);
    CHECK(d0.apply(u) == MultiPoly::variable(n, 0) * Rational(2));
    // Euler operator measures homogeneity
    auto E = euler_operator(n);
    Exponents e = {1, 2, 3};
    auto mono = MultiPoly::monomial(n, e, Rational(7, 3));
    CHECK(E.apply(mono) == mono * Rational(6));
    // box Q = 2 sum eps^2 = 2n
    auto box = box_operator(sig);
    CHECK(box.apply(quadratic_form(sig)) ==
          MultiPoly::constant(n, Rational(2 * int(n))));
    CHECK_THROWS_AS((void)d0.apply(MultiPoly::constant(2, 1)),
                    fcone::ArityMismatch);
}

TEST_CASE("P_j(b) construction identities") {
    auto sig = SignatureVec::split(1, 1);
    const unsigned n = 2;
    for (const Rational& b : {Rational(0), Rational(1), Rational(-2)})
        for (unsigned j = 0; j < n; ++j)
            CHECK(build_pjb(j, b, sig).apply(MultiPoly::constant(n, 1)).is_zero());
    // n=2, eps=(1,-1): P1(1) x1 = -(n-2) = 0
    CHECK(build_pjb(0, 1, sig).apply(MultiPoly::variable(n, 0)).is_zero());
    CHECK_THROWS_AS((void)build_pjb(5, 1, sig), fcone::IndexOutOfRange);
}

TEST_CASE("commutator table") {
    auto sig = SignatureVec::split(2, 2);
    const unsigned n = 4;
    auto E = euler_operator(n);
    for (unsigned j = 0; j < n; ++j) {
        auto xj = DiffOp::mul_by(MultiPoly::variable(n, j));
        auto dj = DiffOp::partial(n, j);
        CHECK((commutator(E, xj) - xj).is_zero());
        CHECK((commutator(E, dj) + dj).is_zero());
        auto box = box_operator(sig);
        CHECK((commutator(box, xj) - dj * Rational(2 * sig.eps[j])).is_zero());
        CHECK((commutator(E, box) + box * Rational(2)).is_zero());
    }
}

TEST_CASE("Jacobi identity on random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        const unsigned n = 3;
        auto A = random_op(n, rng);
        auto B = random_op(n, rng);
        auto C = random_op(n, rng);
        auto J = commutator(A, commutator(B, C)) +
                 commutator(B, commutator(C, A)) +
                 commutator(C, commutator(A, B));
        CHECK(J.is_zero());
    }
}

TEST_CASE("sum of squares and key identity across signatures") {
    for (auto [n1, n2] : {std::pair{1u, 1u}, {2u, 1u}, {2u, 2u}, {3u, 3u}}) {
        auto sig = SignatureVec::split(n1, n2);
        CHECK(check_sum_squares(sig).is_zero());
    }
    auto sig = SignatureVec::split(2, 2);
    auto u = MultiPoly::variable(4, 0) * MultiPoly::variable(4, 1);
    CHECK(check_key_identity(0, Rational(0), 2, u, sig).is_zero());
    CHECK(check_key_identity(2, Rational(1), 1, MultiPoly::constant(4, 1), sig)
              .is_zero());
    CHECK(check_key_identity(1, Rational(5, 3), 3,
                             MultiPoly::variable(4, 3).pow(4), sig)
              .is_zero());
    CHECK_THROWS_AS(
        (void)check_key_identity(0, Rational(1), 0, u, sig),
        fcone::ParameterError);
}

TEST_CASE("bracket normalization is the factor-two form") {
    for (auto [n1, n2] : {std::pair{1u, 1u}, {2u, 1u}, {2u, 2u}}) {
        auto sig = SignatureVec::split(n1, n2);
        CHECK(adjudicate_bracket_factor(sig) == 2);
        const unsigned n = sig.n();
        for (unsigned i = 0; i < n; ++i) {
            CHECK(bracket_px_residual(i, i, sig, 2).is_zero());
            for (unsigned j = 0; j < n; ++j)
                if (i != j) {
                    CHECK(bracket_px_residual(i, j, sig, 2).is_zero());
                    CHECK(!bracket_px_residual(i, j, sig, 1).is_zero());
                }
        }
    }
}

TEST_CASE("degree grading of P_j") {
    auto sig = SignatureVec::split(3, 3);
    const unsigned n = 6;
    auto E = euler_operator(n);
    for (unsigned j = 0; j < n; ++j) {
        auto pj = build_pjb(j, 1, sig);
        CHECK((commutator(E, pj) + pj).is_zero());
    }
}

TEST_CASE("canonical form determinism") {
    const unsigned n = 2;
    auto sig = SignatureVec::split(1, 1);
    auto a = build_pjb(0, Rational(1, 2), sig);
    auto b = build_pjb(0, Rational(1, 2), sig);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    // composing x d then d x differ by the identity
    auto x = DiffOp::mul_by(MultiPoly::variable(n, 0));
    auto d = DiffOp::partial(n, 0);
    CHECK((d * x - x * d - DiffOp::identity(n)).is_zero());
}
