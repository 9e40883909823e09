#pragma once

// Indecomposable modules over a Nakayama algebra and everything
// dimension-theoretic that follows from iterating syzygies: projective and
// injective dimension, global dimension, Gorenstein classification.
//
// Every indecomposable is uniserial and written M(i, k) = e_i A / e_i J^k
// with top S_i and composition factors S_i, ..., S_{i+k-1}.  The syzygy of a
// non-projective M(i, k) is M(i+k, c_i - k); iterating this walks a finite
// deterministic state space, so projective dimension is decided by cycle
// detection.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nakhom/kupisch.hpp"

namespace nakhom {

/// The uniserial module M(i, k) = e_i A / e_i J^k, as (top vertex, length).
struct Indecomposable {
  int vertex{};
  int length{};

  friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
};

inline Indecomposable make_module(const KupischSeries& A, int vertex, int length) {
  if (vertex < 0 || vertex >= A.n())
    throw std::invalid_argument("module vertex " + std::to_string(vertex) +
                                " out of range");
  if (length < 1 || length > A.c(vertex))
    throw std::invalid_argument("module length " + std::to_string(length) +
                                " outside [1, c_" + std::to_string(vertex) +
                                " = " + std::to_string(A.c(vertex)) + "]");
  return {vertex, length};
}

inline bool is_projective(const KupischSeries& A, const Indecomposable& M) {
  return M.length == A.c(M.vertex);
}

inline int top_vertex(const KupischSeries&, const Indecomposable& M) {
  return M.vertex;
}

inline int socle_vertex(const KupischSeries& A, const Indecomposable& M) {
  return A.vertex(M.vertex + M.length - 1);
}

/// All indecomposables over A: for each vertex i, lengths 1..c_i.
inline std::vector<Indecomposable> all_modules(const KupischSeries& A) {
  std::vector<Indecomposable> out;
  for (int i = 0; i < A.n(); ++i)
    for (int k = 1; k <= A.c(i); ++k) out.push_back({i, k});
  return out;
}

/// First syzygy; empty for projectives.  The result is always a valid
/// module: c_i - k <= c_{i+k} by the Kupisch inequality.
inline std::optional<Indecomposable> syzygy(const KupischSeries& A,
                                            const Indecomposable& M) {
  if (is_projective(A, M)) return std::nullopt;
  const int v = A.vertex(M.vertex + M.length);
  const int len = A.c(M.vertex) - M.length;
  assert(len >= 1 && len <= A.c(v));
  return Indecomposable{v, len};
}

/// The full syzygy orbit of M: states[0] = M, states[j+1] = syzygy of
/// states[j], stored up to (not including) the first repeat.  Exactly one of
/// the two terminal forms applies:
///   - projective_at = j: states[j] is projective, so pd(M) = j;
///   - otherwise the orbit is eventually periodic with the given preperiod
///     and period, and pd(M) is infinite.
struct SyzygyOrbit {
  std::vector<Indecomposable> states;
  std::optional<int> projective_at;
  int preperiod = 0;
  int period = 0;

  std::optional<int> projective_dimension() const { return projective_at; }

  /// Omega^l as a state, extending periodically past the stored prefix.
  /// Throws std::out_of_range when pd is finite and l exceeds it.
  Indecomposable state(int l) const {
    assert(l >= 0);
    if (l < static_cast<int>(states.size())) return states[l];
    if (projective_at)
      throw std::out_of_range("syzygy index " + std::to_string(l) +
                              " beyond projective dimension " +
                              std::to_string(*projective_at));
    return states[preperiod + (l - preperiod) % period];
  }
};

inline SyzygyOrbit syzygy_orbit(const KupischSeries& A, const Indecomposable& M) {
  SyzygyOrbit orbit;
  std::unordered_map<long long, int> seen;  // (vertex, length) -> index
  const auto key = [&](const Indecomposable& s) {
    return static_cast<long long>(s.vertex) * (loewy_length(A) + 1) + s.length;
  };
  Indecomposable s = M;
  for (int j = 0;; ++j) {
    const auto [it, inserted] = seen.emplace(key(s), j);
    if (!inserted) {
      orbit.preperiod = it->second;
      orbit.period = j - it->second;
      assert(orbit.preperiod + orbit.period <= A.n() * loewy_length(A));
      return orbit;
    }
    orbit.states.push_back(s);
    if (is_projective(A, s)) {
      orbit.projective_at = j;
      return orbit;
    }
    s = *syzygy(A, s);
  }
}

/// Projective dimension; empty optional encodes infinity.
inline std::optional<int> projective_dimension(const KupischSeries& A,
                                               const Indecomposable& M) {
  return syzygy_orbit(A, M).projective_dimension();
}

/// The dual D(M) as a module over opposite(A).  D preserves length and sends
/// the socle simple of M to the top of D(M); in the stored labels of the
/// opposite series the top vertex is op_vertex(A, socle_vertex(A, M)).
inline Indecomposable dual(const KupischSeries& A, const Indecomposable& M) {
  return {op_vertex(A, socle_vertex(A, M)), M.length};
}

/// Injective dimension, computed as the projective dimension of D(M) over
/// the opposite algebra.
inline std::optional<int> injective_dimension(const KupischSeries& A,
                                              const Indecomposable& M) {
  return projective_dimension(opposite(A), dual(A, M));
}

inline bool is_injective(const KupischSeries& A, const Indecomposable& M) {
  return is_projective(opposite(A), dual(A, M));
}

/// Max of pd over the simple modules; empty optional when any is infinite.
inline std::optional<int> global_dimension(const KupischSeries& A) {
  int best = 0;
  for (int i = 0; i < A.n(); ++i) {
    const auto pd = projective_dimension(A, {i, 1});
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

struct GorensteinInfo {
  std::optional<int> right_injdim;
  std::optional<int> left_injdim;
  bool is_gorenstein = false;
};

namespace detail {

// Injective dimension of the regular module: max over the indecomposable
// projectives, with the opposite algebra passed in so one traversal reuses it.
inline std::optional<int> regular_injdim(const KupischSeries& A,
                                         const KupischSeries& op) {
  int best = 0;
  for (int i = 0; i < A.n(); ++i) {
    const auto d = projective_dimension(op, dual(A, {i, A.c(i)}));
    if (!d) return std::nullopt;
    best = std::max(best, *d);
  }
  return best;
}

}  // namespace detail

/// Right and left injective dimensions of the regular module.  Gorenstein
/// means both are finite; finiteness of both forces equality, which is
/// re-checked at runtime rather than assumed.
inline GorensteinInfo gorenstein(const KupischSeries& A) {
  const KupischSeries op = opposite(A);
  GorensteinInfo info;
  info.right_injdim = detail::regular_injdim(A, op);
  info.left_injdim = detail::regular_injdim(op, A);
  info.is_gorenstein = info.right_injdim && info.left_injdim;
  if (info.is_gorenstein && *info.right_injdim != *info.left_injdim)
    throw std::logic_error("finite left and right injective dimensions differ on " +
                           to_string(A));
  return info;
}

/// Composition multiplicities: entry v counts factors isomorphic to S_v.
inline std::vector<int> dimension_vector(const KupischSeries& A,
                                         const Indecomposable& M) {
  std::vector<int> dv(A.n(), 0);
  for (int l = 0; l < M.length; ++l) ++dv[A.vertex(M.vertex + l)];
  return dv;
}

/// Constructive witness for the Loewy-length bound: the smallest vertex i
/// with c_i >= 2n carries the non-rigid module M(i, n).  Empty when no such
/// vertex exists (i.e. when L(A) < 2n).
inline std::optional<Indecomposable> find_nonrigid_witness(const KupischSeries& A) {
  const int n = A.n();
  for (int i = 0; i < n; ++i)
    if (A.c(i) >= 2 * n) return Indecomposable{i, n};
  return std::nullopt;
}

/// Modules print as "i,k".
inline std::string to_string(const Indecomposable& M) {
  return std::to_string(M.vertex) + "," + std::to_string(M.length);
}

inline Indecomposable parse_module(const KupischSeries& A, std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("module must be written as 'i,k'");
  const auto parse_int = [](std::string_view tok) {
    int value = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw std::invalid_argument("bad module component '" + std::string(tok) + "'");
    return value;
  };
  return make_module(A, parse_int(text.substr(0, comma)),
                     parse_int(text.substr(comma + 1)));
}

}  // namespace nakhom
