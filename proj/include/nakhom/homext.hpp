#pragma once

// Hom and Ext dimensions from the combinatorics of minimal projective
// resolutions.
//
// Over a Nakayama algebra every syzygy of a uniserial module is uniserial,
// so the minimal projective resolution of N = M(s, t) has exactly one
// indecomposable projective per term and is described by the syzygy orbit:
// term j is the projective at the vertex of Omega^j(N), and the differential
// P_j -> P_{j-1} is left multiplication by the path whose length is the
// length of Omega^{j-1}(N).  Applying Hom(-, M(i, k)) turns every term into
// a span of paths from i truncated at length k, and every differential into
// a partial shift of path lengths.  All ranks are therefore counts of path
// lengths in an interval; no field arithmetic enters.  (Ground-field
// independence is exactly why: length equals dimension for these modules
// over any field, and the matrices of the shifts are 0/1.)

#include <optional>
#include <vector>

#include "nakhom/kupisch.hpp"
#include "nakhom/modrep.hpp"

namespace nakhom {

/// Thrown when a closed-form shortcut is asked for outside its hypotheses.
struct hypothesis_violated : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline int floor_div(int a, int b) {
  return a / b - ((a % b != 0 && (a ^ b) < 0) ? 1 : 0);
}

// Number of path lengths l in [lo, hi] with a path from -> to of length l.
inline int path_count_range(const KupischSeries& A, int from, int to, int lo,
                            int hi) {
  if (hi < lo) return 0;
  lo = std::max(lo, 0);
  if (hi < lo) return 0;
  if (A.kind() == Kind::cyclic) {
    const int n = A.n();
    const int r = ((to - from) % n + n) % n;
    return floor_div(hi - r, n) - floor_div(lo - 1 - r, n);
  }
  const int d = to - from;
  return (lo <= d && d <= hi) ? 1 : 0;
}

}  // namespace detail

/// dim Hom(N, M) for N = M(s, t), M = M(i, k): the homomorphisms are left
/// multiplications by paths from i to s of length l with
/// max(0, k - t) <= l <= k - 1.
inline int hom_dim(const KupischSeries& A, const Indecomposable& N,
                   const Indecomposable& M) {
  return detail::path_count_range(A, M.vertex, N.vertex,
                                  std::max(0, M.length - N.length),
                                  M.length - 1);
}

/// dim Ext^l(N, M) for l = 0..horizon, plus the support set {l >= 1 :
/// dims[l] > 0} and the resolution's periodicity data.
struct ExtProfile {
  Indecomposable source;
  Indecomposable target;
  int horizon = 0;
  std::vector<int> dims;
  std::vector<int> support;
  std::optional<int> source_pd;
  int preperiod = 0;  // of the source orbit, meaningful when source_pd is empty
  int period = 0;
};

inline ExtProfile ext_dims(const KupischSeries& A, const Indecomposable& N,
                           const Indecomposable& M, int horizon) {
  assert(horizon >= 1);
  const SyzygyOrbit orbit = syzygy_orbit(A, N);
  const std::optional<int> pd = orbit.projective_dimension();
  const int i = M.vertex, k = M.length;

  // dim Hom(P_j, M): paths from i to the vertex of Omega^j, lengths < k.
  const auto cover_hom = [&](int j) {
    return detail::path_count_range(A, i, orbit.state(j).vertex, 0, k - 1);
  };
  // rank of Hom(P_{j-1}, M) -> Hom(P_j, M): the differential shifts path
  // lengths up by the length of Omega^{j-1}, with cutoff at k.
  const auto rank_delta = [&](int j) {
    if (pd && j > *pd) return 0;
    const Indecomposable prev = orbit.state(j - 1);
    return detail::path_count_range(A, i, prev.vertex, 0, k - 1 - prev.length);
  };

  ExtProfile profile{N, M, horizon, std::vector<int>(horizon + 1, 0), {}, pd,
                     orbit.preperiod, orbit.period};
  for (int l = 0; l <= horizon; ++l) {
    int d;
    if (pd && l > *pd)
      d = 0;
    else if (pd && l == *pd)
      d = l == 0 ? cover_hom(0) : cover_hom(l) - rank_delta(l);
    else if (l == 0)
      d = cover_hom(0) - rank_delta(1);
    else
      d = cover_hom(l) - rank_delta(l) - rank_delta(l + 1);
    assert(d >= 0);
    profile.dims[l] = d;
    if (l >= 1 && d > 0) profile.support.push_back(l);
  }
  assert(profile.dims[0] == hom_dim(A, N, M));
  return profile;
}

/// Ext^1(N, M) via Hom(Omega(N), M).  Only valid under the hypotheses
/// t >= k and N non-projective; callers wanting unrestricted Ext^1 use
/// ext_dims.
inline int ext1_via_lemma(const KupischSeries& A, const Indecomposable& N,
                          const Indecomposable& M) {
  if (is_projective(A, N))
    throw hypothesis_violated("ext1_via_lemma needs a non-projective source");
  if (N.length < M.length)
    throw hypothesis_violated(
        "ext1_via_lemma needs source length >= target length (t >= k)");
  return hom_dim(A, *syzygy(A, N), M);
}

/// Closed-form non-rigidity test: n <= k <= c_i - n.  Complementary to
/// is_rigid on cyclic algebras; on linear algebras both sides are trivial
/// (everything is rigid, the interval is empty).
inline bool nonrigidity_criterion(const KupischSeries& A, const Indecomposable& M) {
  return A.n() <= M.length && M.length <= A.c(M.vertex) - A.n();
}

inline bool is_rigid(const KupischSeries& A, const Indecomposable& M) {
  return ext_dims(A, M, M, 1).dims[1] == 0;
}

/// dim Hom(Omega^l(M), M), with Omega^l taken from the orbit.  Throws
/// std::out_of_range when the resolution ends before degree l.
inline int hom_syzygy_dim(const KupischSeries& A, const Indecomposable& M, int l) {
  return hom_dim(A, syzygy_orbit(A, M).state(l), M);
}

/// Reporting horizon guaranteeing at least two full periods (or twice the
/// finite resolution) are visible, and never less than 50.
inline int default_horizon(const SyzygyOrbit& orbit) {
  const int reach = orbit.projective_at ? *orbit.projective_at
                                        : orbit.preperiod + orbit.period;
  return std::max(2 * reach, 50);
}

/// Decision data for "Ext^l(M, M) != 0 for infinitely many l".
///
/// For l >= 1 the dimension of Ext^l(M, M) is a function of the orbit state
/// at index l-1 alone, so once the orbit is periodic the dimensions are too:
/// checking one full period beyond the preperiod decides the infinite
/// statement.  `witness_degree` is the first degree in that window with a
/// non-vanishing self-extension.
struct SelfExtCertificate {
  bool infinite = false;
  std::optional<int> preperiod;
  std::optional<int> period;
  std::optional<int> witness_degree;
  int horizon = 0;
  std::vector<int> support;
};

inline SelfExtCertificate has_infinitely_many_selfext(const KupischSeries& A,
                                                      const Indecomposable& M) {
  const SyzygyOrbit orbit = syzygy_orbit(A, M);
  SelfExtCertificate cert;
  cert.horizon = default_horizon(orbit);
  const ExtProfile profile = ext_dims(A, M, M, cert.horizon);
  cert.support = profile.support;
  if (orbit.projective_at) return cert;  // finite pd: support is finite
  cert.preperiod = orbit.preperiod;
  cert.period = orbit.period;
  for (int l = orbit.preperiod + 1; l <= orbit.preperiod + orbit.period; ++l)
    if (profile.dims[l] > 0) {
      cert.witness_degree = l;
      cert.infinite = true;
      break;
    }
  return cert;
}

}  // namespace nakhom
