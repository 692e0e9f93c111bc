#include <doctest.h>

#include <sstream>

#include "acphase/matrix.hpp"
#include "oracles.hpp"

using namespace acphase;

namespace {

ExactScalar q(long long n, long long d = 1) { return ExactScalar::fraction(n, d); }
const ExactScalar I = ExactScalar::i();

ExactMatrix pauli(int k) {
    if (k == 1) return ExactMatrix{{0, 1}, {1, 0}};
    if (k == 2) return ExactMatrix{{0, -I}, {I, 0}};
    return ExactMatrix{{1, 0}, {0, -1}};
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    // (1/2 + i/3)(2 - i) = (1 + 1/3) + i(-1/2 + 2/3)
    const ExactScalar a(Rational(1, 2), Rational(1, 3));
    const ExactScalar b(Rational(2), Rational(-1));
    CHECK(a * b == ExactScalar(Rational(4, 3), Rational(1, 6)));
    CHECK((a * b) / b == a);
    CHECK(a + b - b == a);
    CHECK(I * I == ExactScalar(-1));
    CHECK(a.conj() == ExactScalar(Rational(1, 2), Rational(-1, 3)));
    CHECK(a.norm() == Rational(13, 36));
    CHECK(q(6, -4) == q(-3, 2));
    CHECK_THROWS_AS(a / ExactScalar(0), PreconditionError);
    CHECK_THROWS_AS(ExactScalar::fraction(1, 0), PreconditionError);
}

TEST_CASE("doubles convert exactly") {
    // 0.1 is 3602879701896397 / 2^55 in binary64.
    const ExactScalar x = ExactScalar::from_double(0.1);
    CHECK(x.re() == Rational(BigInt(3602879701896397LL), BigInt(1) << 55));
    CHECK(x.to_complex() == Complex(0.1, 0.0));
    CHECK(ExactScalar::from_double(-0.5, 0.25) == ExactScalar(Rational(-1, 2), Rational(1, 4)));
    CHECK_THROWS_AS(ExactScalar::from_double(std::nan("")), PreconditionError);
}

TEST_CASE("scalar rendering") {
    CHECK(ExactScalar(0).to_string() == "0");
    CHECK(I.to_string() == "i");
    CHECK((-I).to_string() == "-i");
    CHECK(ExactScalar(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4i");
    std::ostringstream os;
    os << ExactScalar(2);
    CHECK(os.str() == "2");
}

TEST_CASE("product agrees with the triple-loop oracle") {
    ExactMatrix a(3, 4), b(4, 2);
    long long k = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = ExactScalar(Rational(k, 3), Rational(k % 3 - 1)), ++k;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j) b(i, j) = (i + j) % 2 ? ExactScalar(0) : q(static_cast<long long>(i) - 2, 5);
    CHECK(a * b == oracle::naive_product(a, b));
    CHECK_THROWS_AS(b * b, DimensionError);
}

TEST_CASE("pauli algebra") {
    const ExactMatrix id = ExactMatrix::identity(2);
    for (int k = 1; k <= 3; ++k) {
        CHECK(pauli(k) * pauli(k) == id);
        CHECK(pauli(k).adjoint() == pauli(k));
    }
    CHECK(commutator(pauli(1), pauli(2)) == pauli(3) * (ExactScalar(2) * I));
    CHECK(anticommutator(pauli(1), pauli(2)).is_zero());
    CHECK(pauli(2).transpose() == -pauli(2));
    CHECK(pauli(1).nonzero_count() == 2);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS((ExactMatrix{{1, 2}, {3}}), DimensionError);
    CHECK_THROWS_AS(ExactMatrix(2, 2) + ExactMatrix(2, 3), DimensionError);
    CHECK_THROWS_AS(commutator(ExactMatrix(2, 3), ExactMatrix(2, 3)), DimensionError);
    ExactMatrix m(3, 3);
    CHECK_THROWS_AS(m.set_block(2, 2, ExactMatrix::identity(2)), DimensionError);
    CHECK_THROWS_AS(m.block(1, 1, 3, 1), DimensionError);
    m.set_block(1, 1, pauli(1));
    CHECK(m.block(1, 1, 2, 2) == pauli(1));
    CHECK_THROWS_AS(mat_vec(m, ExactVector(2)), DimensionError);
    CHECK_THROWS_AS((NumericMatrix{{Complex(std::numeric_limits<double>::infinity(), 0)}}), PreconditionError);
}

TEST_CASE("characteristic polynomial") {
    // (l-1)(l-2)(l-3) = l^3 - 6 l^2 + 11 l - 6
    ExactMatrix d(3, 3);
    d(0, 0) = 1, d(1, 1) = 2, d(2, 2) = 3;
    d(0, 2) = q(7, 3);  // upper triangular part does not change the spectrum
    const auto c = characteristic_polynomial(d);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == ExactScalar(-6));
    CHECK(c[1] == ExactScalar(11));
    CHECK(c[2] == ExactScalar(-6));
    CHECK(c[3] == ExactScalar(1));

    // sigma_2: l^2 - 1
    const auto p = characteristic_polynomial(pauli(2));
    CHECK(p == std::vector<ExactScalar>{-1, 0, 1});
    CHECK(root_multiplicity(p, 1) == 1);
    CHECK(root_multiplicity(p, -1) == 1);
    CHECK(root_multiplicity(p, 0) == 0);
}

TEST_CASE("root multiplicities agree with generalized eigenspaces") {
    // Jordan block for 2 plus a simple eigenvalue i.
    ExactMatrix j(3, 3);
    j(0, 0) = 2, j(0, 1) = 1, j(1, 1) = 2, j(2, 2) = I;
    const auto c = characteristic_polynomial(j);
    for (const ExactScalar& r : {ExactScalar(2), I, ExactScalar(0)})
        CHECK(root_multiplicity(c, r) == oracle::algebraic_multiplicity(j, r));
    CHECK(root_multiplicity(c, 2) == 2);
}

TEST_CASE("truncated conjugation series") {
    // x commutes with g: every term past order 0 vanishes.
    CHECK(bch_conjugate(pauli(3), pauli(3), 6) == pauli(3));
    // ad_{sigma3}(sigma1) = 2i sigma2, so order 1 adds (-i)(2i sigma2) = 2 sigma2.
    CHECK(bch_conjugate(pauli(3), pauli(1), 1) == pauli(1) + pauli(2) * ExactScalar(2));
    CHECK(bch_conjugate(pauli(3), pauli(1), 0) == pauli(1));
}

TEST_CASE("numeric conversion and norms") {
    const NumericMatrix n = to_numeric(pauli(2));
    CHECK(n(0, 1) == Complex(0, -1));
    CHECK(max_abs(n) == 1.0);
    const NumericVector v = to_numeric(ExactVector{q(1, 4), I});
    CHECK(v[0] == Complex(0.25, 0));
    CHECK(max_abs(v) == 1.0);
}
