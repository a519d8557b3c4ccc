#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curkit/selection.hpp"
#include "test_util.hpp"

using namespace curkit;

TEST_CASE("deim on unit-vector columns selects their support") {
  DenseMatrix u = DenseMatrix::Zero(4, 2);
  u(0, 0) = 1.0;
  u(2, 1) = 1.0;
  CHECK(deim_select(u) == IndexList{0, 2});
}

TEST_CASE("deim on a single column is the argmax of magnitudes") {
  DenseMatrix u(3, 1);
  u << 0.1, 0.9, 0.2;
  u /= u.norm();
  CHECK(deim_select(u) == IndexList{1});
}

TEST_CASE("deim matches the explicit-projector oracle") {
  {
    const DenseMatrix u = test::random_orthonormal(8, 3, 21);
    CHECK(deim_select(u) == test::deim_projector_oracle(u));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseMatrix u = test::random_orthonormal(15, 5, 400 + seed);
    CHECK(deim_select(u) == test::deim_projector_oracle(u));
  }
}

TEST_CASE("deim is sequential: leading columns give a prefix") {
  const DenseMatrix u = test::random_orthonormal(14, 6, 31);
  const IndexList full = deim_select(u);
  for (Index j = 1; j < 6; ++j) {
    const IndexList head = deim_select(u.leftCols(j));
    CHECK(IndexList(full.begin(), full.begin() + j) == head);
  }
}

TEST_CASE("deim residuals vanish at previously selected indices") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DeimResult d = deim_detail(test::random_orthonormal(12, 4, seed));
    for (Index j = 1; j < 4; ++j) {
      for (Index i = 0; i < j; ++i) {
        CHECK(std::abs(d.residual(d.indices[static_cast<std::size_t>(i)], j)) <=
              1e-10);
      }
    }
  }
}

TEST_CASE("deim rejects bases that are not orthonormal") {
  DenseMatrix u(3, 1);
  u << 0.1, 0.9, 0.2;  // norm != 1
  CHECK_THROWS_WITH_AS(deim_select(u),
                       doctest::Contains("not orthonormal"),
                       std::invalid_argument);
  CHECK_THROWS_AS(deim_select(test::random_orthonormal(3, 4, 1)),
                  std::invalid_argument);  // more columns than rows
}

TEST_CASE("ldeim with k_hat = k reduces to deim exactly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseMatrix u = test::random_orthonormal(20, 4, 50 + seed);
    CHECK(ldeim_select(u, 4) == deim_select(u));
  }
}

TEST_CASE("ldeim head equals deim for every oversampling amount") {
  const DenseMatrix u = test::random_orthonormal(16, 3, 61);
  const IndexList deim = deim_select(u);
  for (Index k_hat = 3; k_hat <= 8; ++k_hat) {
    const IndexList s = ldeim_select(u, k_hat);
    REQUIRE(s.size() == static_cast<std::size_t>(k_hat));
    CHECK(IndexList(s.begin(), s.begin() + 3) == deim);
  }
}

TEST_CASE("ldeim hand example: single column, one extra index") {
  // Residual basis of a single column is the column itself; row scores are
  // its magnitudes, the selected index 0 is excluded, index 2 follows.
  DenseMatrix u(4, 1);
  u << 0.9, 0.1, 0.8, 0.05;
  u /= u.norm();  // selection is invariant to the positive scaling
  CHECK(ldeim_select(u, 2) == IndexList{0, 2});
}

TEST_CASE("ldeim matches the independent step-replay oracle") {
  {
    const DenseMatrix u = test::random_orthonormal(10, 2, 71);
    CHECK(ldeim_select(u, 4) == test::ldeim_replay_oracle(u, 4));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseMatrix u = test::random_orthonormal(18, 4, 500 + seed);
    CHECK(ldeim_select(u, 9) == test::ldeim_replay_oracle(u, 9));
  }
}

TEST_CASE("ldeim oversampling beyond the residual support appends in "
          "ascending index order") {
  // Unit-vector basis: the residual matrix is the basis itself, so every row
  // outside the support scores exactly zero.
  DenseMatrix u = DenseMatrix::Zero(6, 2);
  u(1, 0) = 1.0;
  u(3, 1) = 1.0;
  CHECK(ldeim_select(u, 5) == IndexList{1, 3, 0, 2, 4});
}

TEST_CASE("ldeim range errors") {
  const DenseMatrix u = test::random_orthonormal(6, 3, 81);
  CHECK_THROWS_AS(ldeim_select(u, 2), std::invalid_argument);  // k_hat < k
  CHECK_THROWS_AS(ldeim_select(u, 7), std::invalid_argument);  // k_hat > m
}

TEST_CASE("qdeim on unit-vector columns selects their support") {
  DenseMatrix basis = DenseMatrix::Zero(5, 2);
  basis(1, 0) = 1.0;
  basis(3, 1) = 1.0;
  CHECK(qdeim_select(basis) == IndexList{1, 3});
}

TEST_CASE("qdeim on the identity keeps natural order") {
  CHECK(qdeim_select(DenseMatrix::Identity(4, 4)) == IndexList{0, 1, 2, 3});
}

TEST_CASE("qdeim matches the greedy pivoting oracle") {
  {
    const DenseMatrix basis = test::random_orthonormal(8, 3, 91);
    CHECK(qdeim_select(basis) ==
          test::greedy_pivot_oracle(basis.transpose(), 3));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseMatrix basis = test::random_orthonormal(12, 5, 600 + seed);
    CHECK(qdeim_select(basis) ==
          test::greedy_pivot_oracle(basis.transpose(), 5));
  }
}

TEST_CASE("leverage scores are squared row norms") {
  DenseMatrix v = DenseMatrix::Identity(3, 2);
  Vector ell = leverage_scores(v);
  CHECK(ell(0) == doctest::Approx(1.0));
  CHECK(ell(1) == doctest::Approx(1.0));
  CHECK(ell(2) == doctest::Approx(0.0));

  DenseMatrix w(3, 2);
  const double s = 1.0 / std::sqrt(2.0);
  w << s, 0.0, s, 0.0, 0.0, 1.0;
  ell = leverage_scores(w);
  CHECK(ell(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ell(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ell(2) == doctest::Approx(1.0).epsilon(1e-12));

  // ... and the selector orders by score with ties toward the lowest index.
  CHECK(leverage_select(DenseMatrix::Identity(3, 2), 2) == IndexList{0, 1});
  CHECK(leverage_select(w, 2) == IndexList{2, 0});
}

TEST_CASE("leverage scores sum to k") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseMatrix v = test::random_orthonormal(15, 4, 700 + seed);
    CHECK(std::abs(leverage_scores(v).sum() - 4.0) <= 1e-10);
  }
}

TEST_CASE("leverage_select matches a full-sort oracle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseMatrix v = test::random_orthonormal(12, 2, 800 + seed);
    const Vector ell = v.rowwise().squaredNorm();
    std::vector<std::pair<double, Index>> order;
    for (Index i = 0; i < 12; ++i) order.emplace_back(ell(i), i);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    IndexList expected;
    for (int i = 0; i < 5; ++i) expected.push_back(order[i].second);
    CHECK(leverage_select(v, 5) == expected);
  }
  CHECK_THROWS_AS(leverage_select(test::random_orthonormal(6, 2, 1), 7),
                  std::invalid_argument);
}

TEST_CASE("every method returns unique indices") {
  const DenseMatrix u = test::random_orthonormal(20, 5, 901);
  for (IndexList s : {deim_select(u), ldeim_select(u, 11), qdeim_select(u),
                      leverage_select(u, 11)}) {
    IndexList sorted = s;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("selection is invariant under column sign flips") {
  const DenseMatrix u = test::random_orthonormal(18, 4, 902);
  for (Index flip = 0; flip < 4; ++flip) {
    DenseMatrix flipped = u;
    flipped.col(flip) = -flipped.col(flip);
    CHECK(deim_select(flipped) == deim_select(u));
    CHECK(ldeim_select(flipped, 9) == ldeim_select(u, 9));
    CHECK(qdeim_select(flipped) == qdeim_select(u));
    CHECK(leverage_select(flipped, 9) == leverage_select(u, 9));
  }
}

TEST_CASE("select_with_report carries indices, aligned scores, and a time") {
  const DenseMatrix u = test::random_orthonormal(25, 4, 903);
  for (Method method :
       {Method::deim, Method::ldeim, Method::qdeim, Method::leverage}) {
    const Index k_sel = method == Method::deim ? 4 : 8;
    const DenseMatrix basis = method == Method::leverage ? u.leftCols(2) : u;
    const SelectionReport report = select_with_report(method, basis, k_sel);
    CHECK(report.method == method);
    CHECK(report.indices.size() == static_cast<std::size_t>(k_sel));
    CHECK(report.scores.size() == report.indices.size());
    CHECK(report.selection_seconds >= 0.0);
  }
  CHECK_THROWS_AS(select_with_report(Method::deim, u, 8),
                  std::invalid_argument);
}

TEST_CASE("method names round-trip") {
  for (Method method :
       {Method::deim, Method::ldeim, Method::qdeim, Method::leverage}) {
    CHECK(method_from_name(method_name(method)) == method);
  }
  CHECK_THROWS_AS(method_from_name("svd"), std::invalid_argument);
}
