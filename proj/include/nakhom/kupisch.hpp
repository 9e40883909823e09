#pragma once

// Nakayama algebras presented by their Kupisch series.
//
// A connected non-semisimple Nakayama algebra is determined by the sequence
// (c_0, ..., c_{n-1}) of Loewy lengths of its indecomposable projectives,
// together with the shape of its quiver: a single oriented cycle
// 0 -> 1 -> ... -> n-1 -> 0, or a linearly oriented A_n quiver
// 0 -> 1 -> ... -> n-1.  The projective at vertex i has composition series
// S_i, S_{i+1}, ..., S_{i+c_i-1} from the top, so radicals shift vertex
// indices by +1.

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nakhom {

enum class Kind { cyclic, linear };

inline const char* to_cstring(Kind k) {
  return k == Kind::cyclic ? "cyclic" : "linear";
}

/// Thrown by validate/parse when a sequence is not a Kupisch series.
/// `index` is the position of the first violated constraint (-1 when the
/// problem is not tied to a single entry).
struct invalid_series : std::invalid_argument {
  int index;
  invalid_series(const std::string& what, int idx = -1)
      : std::invalid_argument(what), index(idx) {}
};

/// A validated Kupisch series.  Immutable after construction; all
/// constraints below hold:
///   cyclic: n >= 1, every c_i >= 2, and c_{i+1 mod n} >= c_i - 1;
///   linear: n >= 2, c_{n-1} = 1, c_i >= 2 for i < n-1, and c_{i+1} >= c_i - 1.
/// Semisimple algebras are excluded by these constraints.
class KupischSeries {
 public:
  static KupischSeries validate(Kind kind, std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    if (n == 0) throw invalid_series("empty Kupisch series");
    for (int i = 0; i < n; ++i)
      if (seq[i] < 1)
        throw invalid_series("entry c[" + std::to_string(i) + "] = " +
                                 std::to_string(seq[i]) + " < 1",
                             i);
    if (kind == Kind::cyclic) {
      for (int i = 0; i < n; ++i)
        if (seq[i] < 2)
          throw invalid_series(
              "cyclic series needs c[" + std::to_string(i) + "] >= 2", i);
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if (seq[j] < seq[i] - 1)
          throw invalid_series("c[" + std::to_string(j) + "] = " +
                                   std::to_string(seq[j]) + " < c[" +
                                   std::to_string(i) + "] - 1 = " +
                                   std::to_string(seq[i] - 1),
                               j);
      }
    } else {
      if (n < 2)
        throw invalid_series("linear series needs at least 2 vertices");
      if (seq[n - 1] != 1)
        throw invalid_series("linear series needs c[n-1] = 1", n - 1);
      for (int i = 0; i < n - 1; ++i)
        if (seq[i] < 2)
          throw invalid_series(
              "linear series needs c[" + std::to_string(i) + "] >= 2", i);
      for (int i = 0; i < n - 1; ++i)
        if (seq[i + 1] < seq[i] - 1)
          throw invalid_series("c[" + std::to_string(i + 1) + "] = " +
                                   std::to_string(seq[i + 1]) + " < c[" +
                                   std::to_string(i) + "] - 1 = " +
                                   std::to_string(seq[i] - 1),
                               i + 1);
    }
    return KupischSeries(kind, std::move(seq));
  }

  Kind kind() const { return kind_; }
  int n() const { return static_cast<int>(c_.size()); }
  const std::vector<int>& series() const { return c_; }

  /// Loewy length of the projective at vertex i.  Cyclic series accept any
  /// integer index and reduce it mod n (c_i = c_j whenever i = j mod n);
  /// linear series require 0 <= i < n.
  int c(int i) const {
    if (kind_ == Kind::cyclic) return c_[vertex(i)];
    assert(i >= 0 && i < n());
    return c_[i];
  }

  /// Reduce an integer to a vertex index.  Cyclic: mod n; linear: identity
  /// (asserted in range).
  int vertex(int v) const {
    const int m = n();
    if (kind_ == Kind::cyclic) return ((v % m) + m) % m;
    assert(v >= 0 && v < m);
    return v;
  }

  friend bool operator==(const KupischSeries& a, const KupischSeries& b) {
    return a.kind_ == b.kind_ && a.c_ == b.c_;
  }

 private:
  KupischSeries(Kind kind, std::vector<int> c) : kind_(kind), c_(std::move(c)) {}

  Kind kind_;
  std::vector<int> c_;
};

inline int loewy_length(const KupischSeries& A) {
  return *std::max_element(A.series().begin(), A.series().end());
}

inline bool is_selfinjective(const KupischSeries& A) {
  if (A.kind() != Kind::cyclic) return false;
  return std::all_of(A.series().begin(), A.series().end(),
                     [&](int c) { return c == A.series()[0]; });
}

/// Number of paths (0 or 1) of length `len` from vertex `from` to vertex
/// `to` in the underlying quiver.  Purely combinatorial: no truncation by
/// Loewy lengths; callers apply their own cutoffs.
inline int path_count(const KupischSeries& A, int from, int to, int len) {
  assert(len >= 0);
  assert(from >= 0 && from < A.n() && to >= 0 && to < A.n());
  if (A.kind() == Kind::cyclic) {
    const int n = A.n();
    return ((to - from) % n + n) % n == len % n ? 1 : 0;
  }
  return to - from == len ? 1 : 0;
}

/// Index map between the vertices of A and the stored vertices of
/// opposite(A).  The simple at vertex j of A corresponds to the simple at
/// stored vertex op_vertex(A, j) of opposite(A); the map reverses the quiver
/// orientation so that the opposite series again reads along arrows.
/// Applying it twice gives the identity.
inline int op_vertex(const KupischSeries& A, int j) {
  const int n = A.n();
  assert(j >= 0 && j < n);
  if (A.kind() == Kind::cyclic) return (n - j) % n;
  return n - 1 - j;
}

/// Kupisch series of the opposite algebra.  The stored entry at vertex v is
/// the dimension of the injective envelope of the simple of A sitting at
/// vertex op_vertex(A, v); equivalently the count of basis paths of A ending
/// there.  The count is prefix-closed in the path length, so the loop stops
/// at the first failure.
inline KupischSeries opposite(const KupischSeries& A) {
  const int n = A.n();
  std::vector<int> d(n);
  if (A.kind() == Kind::cyclic) {
    for (int v = 0; v < n; ++v) {
      const int j = (n - v) % n;  // vertex of A whose injective we measure
      int len = 0;
      while (A.c(j - len) > len) ++len;
      d[v] = len;
    }
  } else {
    for (int v = 0; v < n; ++v) {
      const int j = n - 1 - v;
      int len = 0;
      while (len <= j && A.c(j - len) > len) ++len;
      d[v] = len;
    }
  }
  return KupischSeries::validate(A.kind(), std::move(d));
}

namespace detail {

inline bool lex_min_rotation(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  for (int r = 1; r < n; ++r)
    for (int i = 0; i < n; ++i) {
      const int d = c[(i + r) % n] - c[i];
      if (d < 0) return false;
      if (d > 0) break;
    }
  return true;
}

}  // namespace detail

/// Yield every valid series with `n` vertices and all entries <= l_max, in
/// lexicographic order.  With dedupe_rotations (cyclic only), exactly one
/// representative per rotation class is yielded: the lexicographically
/// minimal rotation.
inline void enumerate_each(Kind kind, int n, int l_max, bool dedupe_rotations,
                           const std::function<void(const KupischSeries&)>& yield) {
  assert(n >= 1 && l_max >= 2);
  if (kind == Kind::linear && n < 2) return;  // n = 1 linear is semisimple
  std::vector<int> c(n);
  if (kind == Kind::cyclic) {
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        if (c[0] < c[n - 1] - 1) return;
        if (dedupe_rotations && !detail::lex_min_rotation(c)) return;
        yield(KupischSeries::validate(Kind::cyclic, c));
        return;
      }
      const int lo = pos == 0 ? 2 : std::max(2, c[pos - 1] - 1);
      for (int v = lo; v <= l_max; ++v) {
        c[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  } else {
    c[n - 1] = 1;
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n - 1) {
        if (c[n - 2] > 2) return;  // chain constraint against c[n-1] = 1
        yield(KupischSeries::validate(Kind::linear, c));
        return;
      }
      const int lo = pos == 0 ? 2 : std::max(2, c[pos - 1] - 1);
      for (int v = lo; v <= l_max; ++v) {
        c[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
}

inline std::vector<KupischSeries> enumerate(Kind kind, int n, int l_max,
                                            bool dedupe_rotations = false) {
  std::vector<KupischSeries> out;
  enumerate_each(kind, n, l_max, dedupe_rotations,
                 [&](const KupischSeries& A) { out.push_back(A); });
  return out;
}

/// Canonical textual form, e.g. "cyclic:2,3".
inline std::string to_string(const KupischSeries& A) {
  std::string s = to_cstring(A.kind());
  s += ':';
  for (int i = 0; i < A.n(); ++i) {
    if (i) s += ',';
    s += std::to_string(A.series()[i]);
  }
  return s;
}

/// Parse "kind:c0,c1,..." or, with an explicit default kind, a bare "c0,c1,...".
inline KupischSeries parse_series(std::string_view text,
                                  Kind default_kind = Kind::cyclic) {
  Kind kind = default_kind;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    const std::string_view k = text.substr(0, colon);
    if (k == "cyclic")
      kind = Kind::cyclic;
    else if (k == "linear")
      kind = Kind::linear;
    else
      throw invalid_series("unknown series kind '" + std::string(k) + "'");
    text.remove_prefix(colon + 1);
  }
  std::vector<int> seq;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    int value = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw invalid_series("bad series entry '" + std::string(tok) + "'");
    seq.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return KupischSeries::validate(kind, std::move(seq));
}

}  // namespace nakhom
