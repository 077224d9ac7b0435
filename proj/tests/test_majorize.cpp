#include <doctest.h>

#include "jmaj/errors.hpp"
#include "jmaj/gen.hpp"
#include "jmaj/majorize.hpp"

using namespace jm;

namespace {
Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}
}  // namespace

TEST_CASE("majorization verdicts on the worked examples") {
  CHECK(majorizes(vec({2, 2}), vec({3, 1})).holds);
  const MajorizationVerdict bad = majorizes(vec({3, 1}), vec({2, 2}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.slacks(0) == doctest::Approx(-1.0));

  CHECK(weak_majorizes(vec({1, 1}), vec({3, 1})).holds);
  const MajorizationVerdict strict = majorizes(vec({1, 1}), vec({3, 1}));
  CHECK_FALSE(strict.holds);
  CHECK(strict.trace_gap == doctest::Approx(2.0));

  CHECK_THROWS_AS(majorizes(vec({1, 2}), vec({1, 2, 3})), usage_error);
}

TEST_CASE("majorization is reflexive and transitive; antisymmetric up to sorting") {
  SplitMix64 rng(50);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform_int(2, 7);
    Eigen::VectorXd q(n);
    for (int i = 0; i < n; ++i) q(i) = 2.0 * rng.normal();
    const Eigen::VectorXd p = gen_doubly_stochastic(n, rng) * q;
    const Eigen::VectorXd r = gen_doubly_stochastic(n, rng) * p;
    REQUIRE(majorizes(q, q).holds);
    REQUIRE(majorizes(p, q).holds);
    REQUIRE(majorizes(r, p).holds);
    REQUIRE(majorizes(r, q).holds);  // transitivity through the chain
  }
  // p majorized by q and q majorized by p forces equal sorted vectors.
  const Eigen::VectorXd a = vec({3, 1, 2});
  const Eigen::VectorXd b = vec({2, 3, 1});
  CHECK(majorizes(a, b).holds);
  CHECK(majorizes(b, a).holds);
}

TEST_CASE("element-level majorization: Diag example") {
  const Algebra s2 = Algebra::real_sym(2);
  Eigen::MatrixXd xm(2, 2);
  xm << 2, 1, 1, 2;
  const Element x = Element::from_sym(s2, xm);
  const Element d = diag_part(x, JordanFrame::canonical(s2));
  CHECK(majorizes_elements(d, x).holds);
  CHECK(majorizes_elements(x, x).holds);
}

TEST_CASE("ds_transfer_matrix: classical examples") {
  const TTransformChain c = ds_transfer_matrix(vec({2, 2}), vec({3, 1}));
  CHECK(c.t_count == 1);
  Eigen::MatrixXd expect(2, 2);
  expect << 0.5, 0.5, 0.5, 0.5;
  CHECK((c.product - expect).cwiseAbs().maxCoeff() < 1e-14);

  const TTransformChain id = ds_transfer_matrix(vec({1, 2, 3}), vec({3, 2, 1}));
  CHECK(id.t_count == 0);
  CHECK((id.product * vec({3, 2, 1}) - vec({1, 2, 3})).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(ds_transfer_matrix(vec({3, 1}), vec({2, 2})), domain_error);
}

TEST_CASE("ds_transfer_matrix on generated majorized pairs") {
  SplitMix64 rng(51);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform_int(2, 8);
    Eigen::VectorXd q(n);
    for (int i = 0; i < n; ++i) q(i) = 3.0 * rng.normal();
    const Eigen::VectorXd p = gen_doubly_stochastic(n, rng, rng.uniform_int(2, 5)) * q;

    const TTransformChain chain = ds_transfer_matrix(p, q);
    const double q1 = std::max(1.0, q.cwiseAbs().sum());
    REQUIRE((chain.product * q - p).cwiseAbs().maxCoeff() <= 1e-10 * q1);
    REQUIRE(chain.t_count <= n - 1);
    for (int i = 0; i < n; ++i) {
      REQUIRE(std::abs(chain.product.row(i).sum() - 1.0) <= 1e-12);
      REQUIRE(std::abs(chain.product.col(i).sum() - 1.0) <= 1e-12);
      REQUIRE(chain.product.row(i).minCoeff() >= -1e-14);
    }
    // The product of the factors reproduces the product matrix.
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
    for (const Eigen::MatrixXd& f : chain.factors) acc = f * acc;
    REQUIRE((acc - chain.product).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("duplicated values in p and q are handled") {
  const TTransformChain c = ds_transfer_matrix(vec({2, 2, 2}), vec({4, 1, 1}));
  CHECK((c.product * vec({4, 1, 1}) - vec({2, 2, 2})).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(c.t_count <= 2);
}

TEST_CASE("birkhoff decomposition: examples") {
  Eigen::MatrixXd half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  const BirkhoffDecomposition bd = birkhoff_decompose(half);
  CHECK(bd.terms.size() == 2);
  CHECK(bd.terms[0].weight == doctest::Approx(0.5));
  CHECK((bd.reconstruct(2) - half).cwiseAbs().maxCoeff() < 1e-14);

  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(3, 3);
  perm(0, 2) = perm(1, 0) = perm(2, 1) = 1.0;
  const BirkhoffDecomposition pd = birkhoff_decompose(perm);
  CHECK(pd.terms.size() == 1);
  CHECK(pd.terms[0].weight == doctest::Approx(1.0));

  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(2, 2);
  CHECK_THROWS_AS(birkhoff_decompose(bad), domain_error);
}

TEST_CASE("birkhoff round trip on random convex combinations") {
  SplitMix64 rng(52);
  for (int t = 0; t < 200; ++t) {
    const int n = 5;
    const Eigen::MatrixXd d = gen_doubly_stochastic(n, rng, 4);
    const BirkhoffDecomposition bd = birkhoff_decompose(d);
    double wsum = 0.0;
    for (const BirkhoffTerm& term : bd.terms) {
      REQUIRE(term.weight > 0.0);
      REQUIRE(term.weight <= 1.0 + 1e-12);
      wsum += term.weight;
    }
    REQUIRE(std::abs(wsum - 1.0) <= 1e-12);
    REQUIRE((bd.reconstruct(n) - d).cwiseAbs().maxCoeff() <= 1e-10);
    REQUIRE(static_cast<int>(bd.terms.size()) <= n * n - 2 * n + 2);
  }
}

TEST_CASE("is_correlation") {
  CHECK(is_correlation(CoeffMatrix::identity(3)));
  CHECK(is_correlation(CoeffMatrix::ones(2)));
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 2, 1;
  CHECK_FALSE(is_correlation(CoeffMatrix(m)));  // eigenvalue -1
  Eigen::MatrixXd d(2, 2);
  d << 2, 0, 0, 1;
  CHECK_FALSE(is_correlation(CoeffMatrix(d)));  // diagonal != 1
}

TEST_CASE("schur powers") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0.5, 0.5, 1;
  const CoeffMatrix a(m);
  CHECK(schur_power(a, 1)(0, 1) == doctest::Approx(0.5));
  CHECK(schur_power(a, 2)(0, 1) == doctest::Approx(0.25));
  CHECK(schur_power(a, -1)(0, 1) == doctest::Approx(2.0));
  CHECK(schur_power(CoeffMatrix::ones(3), 7)(1, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(schur_power(CoeffMatrix::identity(2), -1), domain_error);
  CHECK_THROWS_AS(schur_power(a, 0), usage_error);

  // PSD stays PSD under entrywise powers (Schur product theorem).
  SplitMix64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const CoeffMatrix p = gen_psd_matrix(4, rng);
    for (int k = 1; k <= 3; ++k)
      REQUIRE(coeff_eigenvalues(schur_power(p, k)).minCoeff() >= -1e-9);
  }
}

TEST_CASE("corr_normalize") {
  Eigen::MatrixXd d(2, 2);
  d << 4, 0, 0, 9;
  const CoeffMatrix c = corr_normalize(CoeffMatrix(d));
  CHECK(c(0, 0) == doctest::Approx(1.0));
  CHECK(c(0, 1) == doctest::Approx(0.0));

  SplitMix64 rng(54);
  for (int t = 0; t < 100; ++t) {
    const CoeffMatrix p = gen_psd_matrix(4, rng);
    bool pos_diag = true;
    for (int i = 0; i < 4; ++i) pos_diag = pos_diag && p(i, i) > 0.0;
    if (!pos_diag) continue;
    REQUIRE(is_correlation(corr_normalize(p)));
  }

  Eigen::MatrixXd bad(2, 2);
  bad << 0, 0, 0, 1;
  CHECK_THROWS_AS(corr_normalize(CoeffMatrix(bad)), domain_error);
}

TEST_CASE("correlation recipes: worked entries") {
  const CoeffMatrix r = corr_ratio(vec({1, 2}));
  CHECK(r(0, 1) == doctest::Approx(0.5));
  CHECK(r(0, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(corr_ratio(vec({2, 1})), domain_error);
  CHECK_THROWS_AS(corr_ratio(vec({-1, 1})), domain_error);

  const CoeffMatrix ad = corr_abs_diff(vec({0, 1}));
  CHECK(ad(0, 1) == doctest::Approx(0.5));

  const CoeffMatrix pf = corr_posdef_fn(PosDefFn::ExpAbs, vec({0.0, std::log(2.0)}));
  CHECK(pf(0, 1) == doctest::Approx(0.5));

  // sinc and t/sinh(t) take the value 1 on the diagonal.
  CHECK(posdef_fn_value(PosDefFn::Sinc, 0.0) == doctest::Approx(1.0));
  CHECK(posdef_fn_value(PosDefFn::TOverSinh, 0.0) == doctest::Approx(1.0));
  CHECK(posdef_fn_value(PosDefFn::Sinc, 1e-6) == doctest::Approx(std::sin(1e-6) / 1e-6));
}

TEST_CASE("correlation recipes produce correlation matrices") {
  SplitMix64 rng(55);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform_int(2, 6);
    Eigen::VectorXd inc(n);
    double acc = rng.uniform(0.1, 1.0);
    for (int i = 0; i < n; ++i) {
      inc(i) = acc;
      acc += rng.uniform(0.0, 2.0);
    }
    REQUIRE(is_correlation(corr_ratio(inc)));

    Eigen::VectorXd pts(n);
    for (int i = 0; i < n; ++i) pts(i) = rng.uniform(-3.0, 3.0);
    REQUIRE(is_correlation(corr_abs_diff(pts)));
    for (PosDefFn fn : {PosDefFn::Cos, PosDefFn::Sinc, PosDefFn::TOverSinh, PosDefFn::ExpAbs})
      REQUIRE(is_correlation(corr_posdef_fn(fn, pts)));
  }
}

TEST_CASE("check_schur_majorization: equal matrices give equality") {
  SplitMix64 rng(56);
  const Algebra alg = Algebra::real_sym(3);
  const Element x = gen_any(alg, rng);
  const JordanFrame f = gen_frame(alg, rng);
  Eigen::MatrixXd m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = 1.0 + ((i + j) % 3);
  const CoeffMatrix a(m);
  const SchurMajorizationCheck chk = check_schur_majorization(a, a, x, f, 2);
  CHECK(chk.ratio_is_correlation);
  CHECK(chk.verdict.holds);
  CHECK(std::abs(chk.verdict.trace_gap) < 1e-9);
  for (const ConsequenceCheck& c : chk.consequences) CHECK(c.ok);

  Eigen::MatrixXd withzero = m;
  withzero(0, 1) = withzero(1, 0) = 0.0;
  CHECK_THROWS_AS(check_schur_majorization(a, CoeffMatrix(withzero), x, f, 1), domain_error);
}

TEST_CASE("find_positivity_violation") {
  SplitMix64 rng(57);
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 2, 2, 1;
  const Algebra s2 = Algebra::real_sym(2);
  const auto witness = find_positivity_violation(CoeffMatrix(bad), s2, 200, rng);
  REQUIRE(witness.has_value());
  CHECK(is_psd_element(*witness));
  const Element ax = schur_product(CoeffMatrix(bad), *witness, JordanFrame::canonical(s2));
  CHECK(lambda_min(ax) < -1e-8);

  // PSD coefficient matrices admit no witness (Theorem 1 forward).
  CHECK_FALSE(find_positivity_violation(gen_psd_matrix(2, rng), s2, 50, rng).has_value());
  CHECK_FALSE(find_positivity_violation(CoeffMatrix::ones(3), Algebra::real_sym(3), 50, rng)
                  .has_value());

  // Works on the other simple kinds too.
  const auto sw = find_positivity_violation(CoeffMatrix(bad), Algebra::spin(4), 200, rng);
  REQUIRE(sw.has_value());
  CHECK(is_psd_element(*sw));
  CHECK(lambda_min(schur_product(CoeffMatrix(bad), *sw,
                                 JordanFrame::canonical(Algebra::spin(4)))) < -1e-8);
  const auto hw = find_positivity_violation(CoeffMatrix(bad), Algebra::complex_herm(2), 200, rng);
  REQUIRE(hw.has_value());

  CHECK_THROWS_AS(find_positivity_violation(
                      CoeffMatrix(bad),
                      Algebra::direct_sum({Algebra::real_sym(1), Algebra::real_sym(1)}), 10, rng),
                  usage_error);
}

TEST_CASE("check_substochastic") {
  SplitMix64 rng(58);
  const Algebra alg = Algebra::real_sym(3);
  const JordanFrame f = JordanFrame::canonical(alg);

  // A = I/2 halves the diagonal: weak majorization but not majorization.
  Eigen::MatrixXd half = 0.5 * Eigen::MatrixXd::Identity(3, 3);
  for (int t = 0; t < 50; ++t) {
    const Element x = gen_psd(alg, rng);
    REQUIRE(check_substochastic(CoeffMatrix(half), x, f).holds);
  }

  // Correlation matrices majorize strictly, hence weakly.
  for (int t = 0; t < 50; ++t) {
    const CoeffMatrix c = gen_correlation(3, rng);
    const Element x = gen_psd(alg, rng);
    REQUIRE(check_substochastic(c, x, f).holds);
  }
}
