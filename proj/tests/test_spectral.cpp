#include <doctest.h>

#include <cmath>

#include "jmaj/errors.hpp"
#include "jmaj/gen.hpp"
#include "jmaj/spectral.hpp"

using namespace jm;

namespace {
const Algebra kS2 = Algebra::real_sym(2);

Element sym2(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return Element::from_sym(kS2, m);
}

const std::vector<Algebra> kAll = {
    Algebra::real_sym(4), Algebra::complex_herm(3), Algebra::spin(5),
    Algebra::direct_sum({Algebra::real_sym(2), Algebra::spin(3)})};
}  // namespace

TEST_CASE("spectral decomposition of [[2,1],[1,2]]") {
  const Element x = sym2(2, 1, 1, 2);
  const SpectralDecomposition d = spectral_decomposition(x);
  CHECK(d.eigenvalues(0) == doctest::Approx(3.0));
  CHECK(d.eigenvalues(1) == doctest::Approx(1.0));
  CHECK((d.synthesize() - x).norm2() < 1e-12);
}

TEST_CASE("spin spectral decomposition has the closed form") {
  const Algebra sp3 = Algebra::spin(3);
  Eigen::VectorXd b(2);
  b << 3, 4;
  const Element x = Element::from_spin(sp3, 0.0, b);
  const SpectralDecomposition d = spectral_decomposition(x);
  CHECK(d.eigenvalues(0) == doctest::Approx(5.0));
  CHECK(d.eigenvalues(1) == doctest::Approx(-5.0));
  CHECK(d.frame[0].spin0() == doctest::Approx(0.5));
  CHECK(d.frame[0].spin_bar()(0) == doctest::Approx(0.3));
  CHECK(d.frame[0].spin_bar()(1) == doctest::Approx(0.4));
  CHECK(d.frame[1].spin_bar()(0) == doctest::Approx(-0.3));

  // Degenerate direction falls back to the first axis.
  const Element e = unit(sp3);
  const SpectralDecomposition de = spectral_decomposition(e);
  CHECK(de.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(de.frame[0].spin_bar()(0) == doctest::Approx(0.5));
}

TEST_CASE("eigenvalues of simple examples") {
  CHECK(eigenvalues(sym2(2, 1, 1, 2))(0) == doctest::Approx(3.0));
  const Element me = -unit(Algebra::real_sym(3));
  CHECK(eigenvalues(me).maxCoeff() == doctest::Approx(-1.0));

  const Algebra sp3 = Algebra::spin(3);
  Eigen::VectorXd b(2);
  b << 1, 0;
  const Eigen::VectorXd ev = eigenvalues(Element::from_spin(sp3, 1.0, b));
  CHECK(ev(0) == doctest::Approx(2.0));
  CHECK(ev(1) == doctest::Approx(0.0));
}

TEST_CASE("reconstruction invariant on random elements") {
  SplitMix64 rng(5);
  for (const Algebra& alg : kAll) {
    for (int t = 0; t < 200; ++t) {
      const Element x = gen_any(alg, rng);
      const SpectralDecomposition d = spectral_decomposition(x);
      REQUIRE((d.synthesize() - x).norm2() <= 1e-10 * std::max(1.0, x.norm2()));
    }
  }
}

TEST_CASE("spectral maps: named examples") {
  CHECK((sqrt_map(unit(kS2)) - unit(kS2)).norm2() < 1e-14);
  CHECK((abs_map(sym2(1, 0, 0, -1)) - unit(kS2)).norm2() < 1e-14);

  const Element x = sym2(2, 1, 1, 2);
  const Element inv = inverse_map(x);
  CHECK((jordan_product(inv, x) - unit(kS2)).norm2() < 1e-12);
}

TEST_CASE("log round-trips exp on random elements") {
  SplitMix64 rng(6);
  for (const Algebra& alg : kAll) {
    for (int t = 0; t < 50; ++t) {
      const Element x = gen_any(alg, rng);  // ||lambda||_inf <= 3
      const Element back = log_map(exp_map(x));
      REQUIRE((back - x).norm2() <= 1e-8 * std::max(1.0, x.norm2()));
    }
  }
}

TEST_CASE("spectral map eigenvalue multiset") {
  SplitMix64 rng(7);
  for (const Algebra& alg : kAll) {
    for (int t = 0; t < 50; ++t) {
      const Element x = gen_any(alg, rng);
      Eigen::VectorXd lam = eigenvalues(x);
      Eigen::VectorXd expect(lam.size());
      for (int i = 0; i < lam.size(); ++i) expect(i) = std::tanh(lam(i));
      std::sort(expect.data(), expect.data() + expect.size(), std::greater<double>());
      const Eigen::VectorXd got = eigenvalues(spectral_map(x, [](double t_) { return std::tanh(t_); }));
      REQUIRE((got - expect).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("domain violations carry the offending eigenvalue") {
  const Element x = sym2(1, 0, 0, -4);
  CHECK_THROWS_AS(log_map(x), domain_error);
  CHECK_THROWS_AS(sqrt_map(x), domain_error);
  CHECK_THROWS_AS(power_map(x, 0.5), domain_error);
  CHECK_THROWS_AS(inverse_map(sym2(1, 0, 0, 0)), domain_error);
  try {
    log_map(x);
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()).find("-4") != std::string::npos);
  }
  // Integer powers of indefinite elements are fine.
  CHECK((power_map(x, 2.0) - jordan_product(x, x)).norm2() < 1e-12);
}

TEST_CASE("trace and determinant") {
  const Element x = sym2(2, 1, 1, 2);
  CHECK(determinant(x) == doctest::Approx(3.0));
  CHECK(trace(unit(Algebra::real_sym(5))) == doctest::Approx(5.0));

  const Algebra sp4 = Algebra::spin(4);
  Eigen::VectorXd b(3);
  b << 1, 2, 2;
  const Element s = Element::from_spin(sp4, 4.0, b);
  CHECK(determinant(s) == doctest::Approx(16.0 - 9.0));

  // det(P_sqrt(a)(x)) = det(a) det(x) for a >= 0.
  SplitMix64 rng(8);
  for (int t = 0; t < 25; ++t) {
    const Element a = gen_psd(Algebra::real_sym(3), rng);
    const Element y = gen_any(Algebra::real_sym(3), rng);
    const Element pax = quad_rep(sqrt_map(a), y);
    const double lhs = determinant(pax);
    const double rhs = determinant(a) * determinant(y);
    REQUIRE(std::abs(lhs - rhs) <= 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }
}

TEST_CASE("norms and eigenvalue order statistics") {
  const Element x = sym2(2, 1, 1, 2);
  CHECK(p_norm(x, std::numeric_limits<double>::infinity()) == doctest::Approx(3.0));
  CHECK(p_norm(unit(Algebra::real_sym(4)), 1.0) == doctest::Approx(4.0));
  CHECK(sum_top_k(x, 1) == doctest::Approx(3.0));
  CHECK(sum_top_k(x, 2) == doctest::Approx(trace(x)));
  CHECK(lambda_max(x) == doctest::Approx(3.0));
  CHECK(lambda_min(x) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sum_top_k(x, 0), usage_error);
  CHECK_THROWS_AS(sum_top_k(x, 3), usage_error);
  CHECK_THROWS_AS(p_norm(x, 0.5), usage_error);
}

TEST_CASE("norm axioms spot check") {
  SplitMix64 rng(9);
  const Algebra alg = Algebra::real_sym(4);
  for (double p : {1.0, 2.0, 3.5, std::numeric_limits<double>::infinity()}) {
    for (int t = 0; t < 40; ++t) {
      const Element x = gen_any(alg, rng);
      const Element y = gen_any(alg, rng);
      REQUIRE(p_norm(x + y, p) <= p_norm(x, p) + p_norm(y, p) + 1e-9);
      REQUIRE(p_norm(x * -2.5, p) == doctest::Approx(2.5 * p_norm(x, p)));
    }
  }
}

TEST_CASE("positivity predicates") {
  CHECK(is_psd_element(unit(kS2)));
  CHECK(is_positive(unit(kS2)));
  CHECK_FALSE(is_psd_element(-unit(kS2)));
  CHECK_FALSE(is_positive(-unit(kS2)));
  const Element e1 = sym2(1, 0, 0, 0);
  CHECK(is_psd_element(e1));
  CHECK_FALSE(is_positive(e1));
}

TEST_CASE("eigenvalue map is Lipschitz-stable under small perturbations") {
  SplitMix64 rng(10);
  const Algebra alg = Algebra::real_sym(4);
  for (int t = 0; t < 40; ++t) {
    const Element x = gen_any(alg, rng);
    Element h = gen_any(alg, rng);
    h = h * (1e-7 / std::max(1e-12, h.norm2()));
    const Eigen::VectorXd a = eigenvalues(x);
    const Eigen::VectorXd b = eigenvalues(x + h);
    // ||lambda(x) - lambda(y)||_2 <= ||x - y||_2 (Lidskii-type stability)
    REQUIRE((a - b).norm() <= h.norm2() * (1.0 + 1e-6) + 1e-12);
  }
}
