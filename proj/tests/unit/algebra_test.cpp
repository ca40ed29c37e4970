#include <gtest/gtest.h>

#include <random>

#include "nlsenergy/algebra/basis.hpp"
#include "nlsenergy/algebra/operations.hpp"
#include "nlsenergy/algebra/reduction.hpp"
#include "nlsenergy/algebra/text_format.hpp"

namespace nlsenergy::algebra {
namespace {

Coefficient q(long num, long den = 1) { return Coefficient(mpq_class(num, den)); }
Coefficient iq(long num, long den = 1) { return Coefficient(0, mpq_class(num, den)); }

// Random expression with small orders and coefficients, fixed signature.
DensityExpr random_expr(std::mt19937_64& gen, int nu, int nv, int total, int terms) {
  const auto monos = enumerate_monomials({nu, nv, total}, total);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<long> val(-5, 5);
  DensityExpr e;
  for (int i = 0; i < terms; ++i) e.add_term(monos[pick(gen)], Coefficient(mpq_class(val(gen)), mpq_class(val(gen))));
  return e;
}

TEST(Coefficient, ArithmeticAndCanonicalForm) {
  const Coefficient a(mpq_class(2, 4), mpq_class(-3, 9));
  EXPECT_EQ(a.re(), mpq_class(1, 2));
  EXPECT_EQ(a.im(), mpq_class(-1, 3));
  EXPECT_EQ(Coefficient::imaginary_unit() * Coefficient::imaginary_unit(), Coefficient(-1));
  EXPECT_EQ(a * a.conj(), q(13, 36));
  EXPECT_EQ((a / a), Coefficient(1));
  EXPECT_THROW((void)(a / Coefficient()), std::domain_error);
}

TEST(Coefficient, TextRoundTrip) {
  for (const auto& c : {q(0), q(-7, 3), iq(5, 2), Coefficient(mpq_class(1, 2), mpq_class(-3, 4)), iq(-1)}) {
    EXPECT_EQ(Coefficient::parse(c.to_string()), c) << c.to_string();
  }
  EXPECT_EQ(Coefficient(mpq_class(1, 2), mpq_class(-3, 4)).to_string(), "1/2-3/4*i");
  EXPECT_THROW((void)parse_rational("1/0"), std::invalid_argument);
}

TEST(Monomial, CanonicalOrderingAndSignature) {
  const Monomial m({0, 3, 1}, {2});
  EXPECT_EQ(m.u_orders(), (std::vector<int>{3, 1, 0}));
  EXPECT_EQ(m.signature(), (Signature{3, 1, 6}));
  EXPECT_EQ(m.max_order(), 3);
  EXPECT_EQ(m.derivative_bearing(), 3);
  EXPECT_EQ(m.conjugate(), Monomial({2}, {3, 1, 0}));
  const std::vector<Factor> fs{{1, false}, {2, true}, {3, false}, {0, false}};
  EXPECT_EQ(canonicalize(fs), Monomial({3, 1, 0}, {2}));
  EXPECT_THROW(Monomial({-1}, {}), std::invalid_argument);
}

TEST(DensityExpr, ZeroTermsVanish) {
  DensityExpr e(Monomial({1}, {0}), 3);
  e.add_term(Monomial({1}, {0}), -3);
  EXPECT_TRUE(e.empty());
  e += DensityExpr(Monomial({2}, {2}), iq(1));
  EXPECT_FALSE(e.is_real());
  EXPECT_TRUE((e + conjugate(e)).is_real());
}

TEST(TextFormat, RoundTrip) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = random_expr(gen, 2, 3, 5, 6);
    EXPECT_EQ(parse_text(to_text(e)), e);
    EXPECT_EQ(parse_lines(to_text_lines(e)), e);
  }
  EXPECT_EQ(to_text(DensityExpr()), "0");
  EXPECT_EQ(to_text(Monomial()), "1");
  EXPECT_EQ(to_text(Monomial({2}, {0})), "d^2[u] d^0[conj(u)]");
  EXPECT_THROW((void)parse_term("3 * d^x[u]"), std::invalid_argument);
}

TEST(Operations, RePartAndImPartAreReal) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_expr(gen, 2, 2, 4, 5);
    EXPECT_TRUE(re_part(e).is_real());
    EXPECT_TRUE(im_part(e).is_real());
    EXPECT_EQ(re_part(e) + Coefficient::imaginary_unit() * im_part(e), e);
  }
}

TEST(Operations, StarOnTwoFactorDensity) {
  // d/dt int d^2u d^1ubar along u_t = i u_xx
  DensityExpr expected;
  expected.add_term(Monomial({4}, {1}), iq(1));
  expected.add_term(Monomial({2}, {3}), iq(-1));
  EXPECT_EQ(star(DensityExpr(Monomial({2}, {1}))), expected);
}

TEST(Operations, StarstarMatchesReferenceExpansion) {
  // Reference values from tests/oracles/density_oracle.py (composition-wise Leibniz).
  DensityExpr expected;
  expected.add_term(Monomial({0, 0, 0}, {1, 1, 0}), iq(-2));
  expected.add_term(Monomial({0, 0, 0}, {2, 0, 0}), iq(-2));
  expected.add_term(Monomial({1, 0, 0}, {1, 0, 0}), iq(-12));
  expected.add_term(Monomial({1, 1, 0}, {0, 0, 0}), iq(-6));
  expected.add_term(Monomial({2, 0, 0}, {0, 0, 0}), iq(-2));
  EXPECT_EQ(starstar(DensityExpr(Monomial({2}, {0})), 2), expected);
  EXPECT_THROW((void)starstar(expected, 0), std::invalid_argument);
}

TEST(Operations, StarstarCommutesWithConjugation) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto e = random_expr(gen, 1, 2, 4, 3);
    EXPECT_EQ(starstar(conjugate(e), 2), conjugate(starstar(e, 2)));
    EXPECT_EQ(star(conjugate(e)), conjugate(star(e)));
  }
}

TEST(Operations, DerivationsCommuteWithTotalDerivative) {
  // star and starstar map IBP identities to IBP identities.
  std::mt19937_64 gen(9);
  const auto monos = enumerate_monomials({2, 1, 3}, 3);
  for (int trial = 0; trial < 6; ++trial) {
    const auto& m = monos[gen() % monos.size()];
    const auto g = total_derivative(m);
    EXPECT_TRUE(in_ibp_span(star(g)));
    EXPECT_TRUE(in_ibp_span(starstar(g, 2)));
  }
}

TEST(Basis, MonomialCountsMatchBruteForce) {
  EXPECT_EQ(enumerate_monomials({3, 3, 8}, 8).size(), 110u);
  EXPECT_EQ(enumerate_monomials({2, 2, 6}, 6).size(), 30u);
  EXPECT_EQ(enumerate_monomials({2, 2, 6}, 3).size(), 16u);
  EXPECT_EQ(ibp_generators({3, 3, 8}, 8).size(), 74u);
  const auto ms = enumerate_monomials({2, 1, 4}, 4);
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
  EXPECT_THROW((void)ibp_generators({1, 1, 0}, 0), std::invalid_argument);
}

TEST(Basis, Classification) {
  // k = 3, p = 2
  EXPECT_EQ(classify(Monomial({2, 1, 0}, {2, 1, 0}), 3, 2), DensityClass::Omega);
  EXPECT_EQ(classify(Monomial({3, 0, 0}, {3, 0, 0}), 3, 2), DensityClass::Other);  // only two derivative-bearing
  EXPECT_EQ(classify(Monomial({2, 0, 0}, {2, 0, 0}), 3, 2), DensityClass::Gamma);
  EXPECT_EQ(classify(Monomial({3, 0, 0}, {1, 0, 0}), 3, 2), DensityClass::Other);  // order above k-1
  EXPECT_EQ(classify(Monomial({2, 0, 0, 0, 0}, {2, 0, 0, 0, 0}), 3, 2), DensityClass::Theta);
  EXPECT_THROW((void)classify(Monomial(), 1, 2), std::invalid_argument);
}

TEST(Reduction, ConservationLawsReduceToZero) {
  for (int p : {2, 3}) {
    const DensityExpr mass(Monomial({0}, {0}));
    EXPECT_TRUE(in_ibp_span(time_derivative(mass, p)));
    const std::vector<int> zeros(static_cast<std::size_t>(p + 1), 0);
    DensityExpr hamiltonian(Monomial({1}, {1}));
    hamiltonian += DensityExpr(Monomial(zeros, zeros), Coefficient(mpq_class(1, p + 1)));
    EXPECT_TRUE(in_ibp_span(time_derivative(hamiltonian, p)));
    // A non-conserved density does not.
    EXPECT_FALSE(in_ibp_span(time_derivative(DensityExpr(Monomial({2}, {2})), p)));
  }
}

TEST(Reduction, QuadraticTopDerivativeIsIbpNull) {
  for (int k = 2; k <= 6; ++k) EXPECT_TRUE(in_ibp_span(star(DensityExpr(Monomial({k}, {k})))));
}

TEST(Reduction, ResidualIsIndependentOfGeneratorOrder) {
  const Signature sig{2, 2, 6};
  auto gens = ibp_generators(sig, 6);
  const QuotientSpace a(gens);
  std::mt19937_64 gen(21);
  std::shuffle(gens.begin(), gens.end(), gen);
  const QuotientSpace b(gens);
  EXPECT_EQ(a.rank(), b.rank());
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_expr(gen, 2, 2, 6, 8);
    const auto ra = a.reduce(e);
    const auto rb = b.reduce(e);
    EXPECT_EQ(ra.residual, rb.residual);
  }
}

TEST(Reduction, CertificateReconstructsInput) {
  const Signature sig{2, 2, 4};
  const auto allowed = [](const Monomial& m) { return m.derivative_bearing() >= 4; };
  const QuotientSpace quotient(ibp_generators(sig, 4), allowed);
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto e = random_expr(gen, 2, 2, 4, 6);
    const auto r = quotient.reduce(e);
    DensityExpr rebuilt = r.residual + r.allowed_part;
    for (std::size_t g = 0; g < r.certificate.size(); ++g) rebuilt += quotient.generators()[g] * r.certificate[g];
    EXPECT_EQ(rebuilt, e);
    for (const auto& [m, c] : r.allowed_part.terms()) EXPECT_TRUE(allowed(m));
    // Adding any generator leaves the residual unchanged.
    const auto& g0 = quotient.generators()[gen() % quotient.generators().size()];
    EXPECT_EQ(quotient.reduce(e + g0 * Coefficient(3)).residual, r.residual);
  }
}

TEST(Reduction, SectorMismatchIsRejected) {
  const QuotientSpace quotient(ibp_generators({1, 1, 4}, 4));
  EXPECT_THROW((void)quotient.reduce(DensityExpr(Monomial({2}, {1}))), SignatureMismatch);
}

TEST(Reduction, RealSolveWithPinnedColumns) {
  const Monomial a({1}, {0});
  const Monomial b({0}, {1});
  const std::vector<DensityExpr> cols{DensityExpr(a), DensityExpr(a) * Coefficient(2), DensityExpr(b, iq(1))};
  DensityExpr rhs(a, 4);
  rhs.add_term(b, iq(-3));
  auto sol = solve_real_combination(cols, rhs);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->values, (std::vector<mpq_class>{4, 0, -3}));
  const std::vector<std::size_t> pinned{0};
  sol = solve_real_combination(cols, rhs, pinned);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->values, (std::vector<mpq_class>{0, 2, -3}));
  // Imaginary right-hand side on a real-only column is inconsistent.
  EXPECT_FALSE(solve_real_combination(std::vector<DensityExpr>{DensityExpr(a)}, DensityExpr(a, iq(1))));
}

}  // namespace
}  // namespace nlsenergy::algebra
