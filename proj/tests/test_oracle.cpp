#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nakhom/homext.hpp"
#include "nakhom/oracle.hpp"

using namespace nakhom;

namespace {

KupischSeries cyc(std::vector<int> c) {
  return KupischSeries::validate(Kind::cyclic, std::move(c));
}
KupischSeries lin(std::vector<int> c) {
  return KupischSeries::validate(Kind::linear, std::move(c));
}

// Transport a representation across the duality: spaces move to the
// op-labelled vertices, arrows transpose.
MatrixRep transpose_rep(const KupischSeries& A, const MatrixRep& X) {
  const auto op = opposite(A);
  const int n = A.n();
  MatrixRep D;
  D.dims.assign(n, 0);
  for (int v = 0; v < n; ++v) D.dims[v] = X.dims[op_vertex(op, v)];
  D.arrows.resize(arrow_count(op));
  for (int e = 0; e < arrow_count(op); ++e) {
    const int source_in_A = op_vertex(op, arrow_target(op, e));
    const Mat& a = X.arrows[source_in_A];
    Mat t(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    D.arrows[e] = t;
  }
  return D;
}

std::vector<int> top_dims(const KupischSeries& A, const MatrixRep& X) {
  std::vector<int> tops(A.n());
  for (int v = 0; v < A.n(); ++v) {
    const int e_in = A.kind() == Kind::cyclic ? (v + A.n() - 1) % A.n() : v - 1;
    const int rad =
        (A.kind() == Kind::linear && v == 0) ? 0 : linalg::rank(X.arrows[e_in]);
    tops[v] = X.dims[v] - rad;
  }
  return tops;
}

int cover_hom_reference(const KupischSeries& A, const SyzygyOrbit& orbit, int j,
                        const Indecomposable& M) {
  int count = 0;
  const int vertex = orbit.state(j).vertex;
  for (int l = 0; l < M.length; ++l)
    count += path_count(A, M.vertex, vertex, l);
  return count;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK(Rational(1) / Rational(1, 7) == Rational(7));
}

TEST_CASE("rank, nullspace, solve") {
  Mat m(2, 3);
  m(0, 0) = 1;
  m(0, 2) = 1;
  m(1, 1) = 1;
  CHECK(linalg::rank(m) == 2);
  const Mat ns = linalg::nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).is_zero());

  // degenerate shapes
  CHECK(linalg::rank(Mat(0, 4)) == 0);
  CHECK(linalg::nullspace(Mat(0, 4)).cols() == 4);
  CHECK(linalg::nullspace(Mat(4, 0)).cols() == 0);

  Mat a(2, 2), b(2, 1);
  a(0, 0) = 1;
  a(1, 1) = 2;
  b(0, 0) = 3;
  b(1, 0) = 4;
  const auto x = linalg::solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  Mat bad_a(2, 1), bad_b(2, 1);
  bad_a(0, 0) = 1;
  bad_b(1, 0) = 1;
  CHECK_FALSE(linalg::solve(bad_a, bad_b).has_value());
}

TEST_CASE("rep_of: shapes and relations") {
  const auto rep = rep_of(cyc({3}), {0, 2});
  REQUIRE(rep.dims == std::vector<int>{2});
  CHECK(rep.arrows[0](1, 0) == Rational(1));
  CHECK(rep.arrows[0](0, 1).is_zero());
  CHECK(rep.arrows[0](0, 0).is_zero());

  CHECK(rep_of(cyc({2, 3}), {1, 2}).dims == std::vector<int>{1, 1});
  CHECK(rep_of(lin({3, 2, 1}), {0, 3}).dims == std::vector<int>{1, 1, 1});

  for (int n = 1; n <= 3; ++n)
    for (const auto& A : enumerate(Kind::cyclic, n, 6))
      for (const auto& M : all_modules(A)) {
        const auto r = rep_of(A, M);
        CHECK(r.total() == M.length);
        CHECK(r.dims == dimension_vector(A, M));
        CHECK(relations_hold(A, r));
      }
  for (int n = 2; n <= 5; ++n)
    for (const auto& A : enumerate(Kind::linear, n, n))
      for (const auto& M : all_modules(A)) CHECK(relations_hold(A, rep_of(A, M)));
}

TEST_CASE("hom_dim_oracle agrees with the closed form") {
  CHECK(hom_dim_oracle(cyc({3}), {0, 2}, {0, 2}) == 2);
  CHECK(hom_dim_oracle(cyc({2, 2}), {0, 1}, {1, 1}) == 0);
  for (int n = 1; n <= 2; ++n)
    for (const auto& A : enumerate(Kind::cyclic, n, 5))
      for (const auto& N : all_modules(A))
        for (const auto& M : all_modules(A))
          CHECK(hom_dim_oracle(A, N, M) == hom_dim(A, N, M));
  for (const auto& A : enumerate(Kind::linear, 4, 4))
    for (const auto& N : all_modules(A))
      for (const auto& M : all_modules(A))
        CHECK(hom_dim_oracle(A, N, M) == hom_dim(A, N, M));
}

TEST_CASE("oracle resolutions are minimal: cover Homs match the path counts") {
  for (const auto& A : {cyc({3}), cyc({2, 3}), cyc({3, 3}), cyc({2, 3, 3})})
    for (const auto& N : all_modules(A)) {
      const auto orbit = syzygy_orbit(A, N);
      const int depth = 4;
      const auto res = minimal_resolution_oracle(A, rep_of(A, N), depth);
      const auto pd_expected = orbit.projective_dimension();
      if (pd_expected && *pd_expected <= depth)
        CHECK(res.pd == pd_expected);
      else
        CHECK_FALSE(res.pd.has_value());
      for (const auto& M : all_modules(A))
        for (int j = 0; j <= depth; ++j) {
          const auto pd = orbit.projective_dimension();
          const int expected =
              (pd && j > *pd) ? 0 : cover_hom_reference(A, orbit, j, M);
          CHECK(hom_dim_oracle(A, res.terms[j], rep_of(A, M)) == expected);
        }
    }
}

TEST_CASE("ext_dim_oracle: frozen examples") {
  CHECK(ext_dim_oracle(cyc({3}), {0, 2}, {0, 2}, 2) == 1);
  CHECK(ext_dim_oracle(cyc({3}), {0, 2}, {0, 2}, 1) == 1);
  CHECK(ext_dim_oracle(cyc({3}), {0, 2}, {0, 2}, 0) == 2);
  CHECK(ext_dim_oracle(cyc({2, 3}), {1, 3}, {0, 1}, 1) == 0);  // projective source
  CHECK(ext_dim_oracle(cyc({2, 3}), {1, 2}, {1, 2}, 2) == 0);
  CHECK(ext_dim_oracle(cyc({2, 3}), {0, 1}, {0, 1}, 2) == 1);
}

TEST_CASE("ext_dim_oracle agrees with the combinatorial engine everywhere") {
  // The full sweep: every pair over every cyclic algebra with n <= 3,
  // c_i <= 8 and every linear algebra with n <= 6, degrees 0..8.  Failures
  // are counted rather than CHECKed per instance to keep the report small.
  long mismatches = 0;
  const auto sweep = [&](const KupischSeries& A) {
    const auto mods = all_modules(A);
    for (const auto& N : mods)
      for (const auto& M : mods) {
        const auto p = ext_dims(A, N, M, 8);
        for (int l = 0; l <= 8; ++l)
          if (ext_dim_oracle(A, N, M, l) != p.dims[l]) ++mismatches;
      }
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& A : enumerate(Kind::cyclic, n, 8)) sweep(A);
  for (int n = 2; n <= 6; ++n)
    for (const auto& A : enumerate(Kind::linear, n, n)) sweep(A);
  CHECK(mismatches == 0);
}

TEST_CASE("random sample agreement across both engines") {
  std::mt19937 rng(20240811);
  std::vector<KupischSeries> pool;
  for (int n = 1; n <= 3; ++n)
    for (const auto& A : enumerate(Kind::cyclic, n, 6)) pool.push_back(A);
  for (int n = 2; n <= 5; ++n)
    for (const auto& A : enumerate(Kind::linear, n, n)) pool.push_back(A);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& A = pool[rng() % pool.size()];
    const auto mods = all_modules(A);
    const auto& N = mods[rng() % mods.size()];
    const auto& M = mods[rng() % mods.size()];
    const int l = static_cast<int>(rng() % 6);
    CHECK(ext_dim_oracle(A, N, M, l) == ext_dims(A, N, M, std::max(l, 1)).dims[l]);
    CHECK(hom_dim_oracle(A, N, M) == hom_dim(A, N, M));
  }
}

TEST_CASE("duality transposes representations") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& A : enumerate(Kind::cyclic, n, 5)) {
      const auto op = opposite(A);
      for (const auto& M : all_modules(A)) {
        const auto D = transpose_rep(A, rep_of(A, M));
        CHECK(relations_hold(op, D));
        const auto expected = rep_of(op, dual(A, M));
        CHECK(D.dims == expected.dims);
        // the transpose is uniserial with simple top at the dual's vertex,
        // which pins it down to dual(A, M) up to isomorphism
        const auto tops = top_dims(op, D);
        for (int v = 0; v < n; ++v)
          CHECK(tops[v] == (v == dual(A, M).vertex ? 1 : 0));
      }
    }
  for (const auto& A : enumerate(Kind::linear, 4, 4)) {
    const auto op = opposite(A);
    for (const auto& M : all_modules(A)) {
      const auto D = transpose_rep(A, rep_of(A, M));
      CHECK(relations_hold(op, D));
      CHECK(D.dims == rep_of(op, dual(A, M)).dims);
      const auto tops = top_dims(op, D);
      for (int v = 0; v < A.n(); ++v)
        CHECK(tops[v] == (v == dual(A, M).vertex ? 1 : 0));
    }
  }
}
