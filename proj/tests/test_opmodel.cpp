#include <doctest.h>

#include <zetaquant/opmodel.hpp>

#include <vector>

using namespace zetaquant;

TEST_SUITE("opmodel") {

TEST_CASE("multiset construction and expansion") {
    ZeroMultiset z(std::vector<MultisetEntry>{{2.0, 2}, {Complex(0, 1), 1}});
    CHECK(z.expanded_size() == 3);
    const auto e = z.expanded();
    REQUIRE(e.size() == 3);
    CHECK(e[0] == Complex(2.0));
    CHECK(e[1] == Complex(2.0));
    CHECK(e[2] == Complex(0, 1));
    const auto r = z.reciprocal();
    CHECK(r.entries()[0].value == Complex(0.5));
    CHECK(r.entries()[1].value == Complex(0, -1));
    CHECK_THROWS_AS(z.add(0.0), ConstructionError);
    CHECK_THROWS_AS(z.add(1.0, 0), ConstructionError);
    CHECK_THROWS_AS(z.add(Complex(INFINITY, 0)), ConstructionError);
}

TEST_CASE("operator diagonal holds reciprocals") {
    ZeroMultiset z(std::vector<MultisetEntry>{{4.0, 1}, {-2.0, 3}});
    const DiagonalOperator op = from_zeros(z);
    REQUIRE(op.size() == 4);
    CHECK(op.diagonal()[0] == Complex(0.25));
    CHECK(op.diagonal()[3] == Complex(-0.5));
    CHECK(op.source_values()[1] == Complex(-2.0));
    CHECK(eigen_multiplicity(op, -0.5) == 3);
    CHECK(eigen_multiplicity(op, 0.5) == 0);
    CHECK(operator_norm(op) == 0.5);
    const Spectrum s = spectrum(op);
    CHECK(s.points.size() == 2);
    CHECK_FALSE(s.includes_zero);
}

TEST_CASE("from_diagonal keeps entries exactly") {
    const std::vector<Complex> d{0.1, Complex(0.3, 0.7)};
    const DiagonalOperator op = from_diagonal(d);
    CHECK(op.diagonal()[0] == Complex(0.1));
    CHECK(op.diagonal()[1] == Complex(0.3, 0.7));
    CHECK_THROWS_AS(from_diagonal(std::vector<Complex>{0.0}), ConstructionError);
}

TEST_CASE("truncations need a tail model and carry 0 in the spectrum") {
    ZeroMultiset z(std::vector<MultisetEntry>{{1.0, 1}, {2.0, 1}});
    z.mark_truncation();
    CHECK_THROWS_AS(from_zeros(z), ConstructionError);
    const DiagonalOperator op = from_zeros(z, PowerLawTail{1.0});
    CHECK(op.is_truncation());
    CHECK(spectrum(op).includes_zero);
}

TEST_CASE("classification under tail models") {
    const DiagonalOperator op = from_diagonal(std::vector<Complex>{1.0, 0.5});
    const IdealClass fin = classify(op, 3);
    CHECK(fin.trace_class());
    CHECK(fin.is_compact);
    CHECK(fin.is_self_adjoint);

    const IdealClass harmonic = classify(op, PowerLawTail{1.0}, 3);
    CHECK_FALSE(harmonic.trace_class());
    CHECK(harmonic.hilbert_schmidt());
    REQUIRE(harmonic.p_star);
    CHECK(*harmonic.p_star == 2);

    const IdealClass slow = classify(op, PowerLawTail{0.3}, 3);
    CHECK_FALSE(slow.p_star);
    CHECK(slow.is_compact);

    const IdealClass declared = classify(op, DeclaredTail{2}, 3);
    CHECK(declared.in_ideal(2));
    CHECK_FALSE(declared.in_ideal(1));
    CHECK_THROWS_AS(classify(op, DeclaredTail{0}, 3), DomainError);
    CHECK_THROWS_AS(classify(op, 0), DomainError);
}

TEST_CASE("self-adjointness reads the imaginary parts") {
    const DiagonalOperator op = from_diagonal(std::vector<Complex>{1.0, Complex(0.5, 1e-9)});
    CHECK_FALSE(classify(op, 1).is_self_adjoint);
    CHECK(classify(op, 1, 1e-8).is_self_adjoint);
}

TEST_CASE("power-law fit recovers exact exponents") {
    std::vector<Complex> a, b;
    for (int n = 1; n <= 1000; ++n) {
        a.push_back(1.0 / n);
        b.push_back(std::pow(n, -1.5));
    }
    CHECK(fit_power_law_tail(from_diagonal(a)).kappa == 1.0);
    CHECK(fit_power_law_tail(from_diagonal(b)).kappa == 1.5);
    CHECK_THROWS_AS(fit_power_law_tail(from_diagonal(std::vector<Complex>{1.0})), ConstructionError);
}

TEST_CASE("with_tail swaps the model only") {
    const DiagonalOperator op = from_diagonal(std::vector<Complex>{1.0, 0.5});
    const DiagonalOperator other = op.with_tail(DeclaredTail{1});
    CHECK(std::holds_alternative<DeclaredTail>(other.tail_model()));
    CHECK(other.diagonal() == op.diagonal());
}

}
