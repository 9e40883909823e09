#pragma once

// Executable statements.  Each check turns one theorem into a predicate
// over a single algebra, reporting holds / counterexample / skipped; a
// counterexample always carries a witness that replays through one CLI
// command.  The survey runner sweeps enumerated algebras and merges
// verdicts deterministically regardless of worker count.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "nakhom/homext.hpp"
#include "nakhom/kupisch.hpp"
#include "nakhom/modrep.hpp"
#include "nakhom/serialize.hpp"

namespace nakhom {

enum class Status { holds, counterexample, skipped };

inline const char* to_cstring(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::counterexample: return "counterexample";
    default: return "skipped";
  }
}

struct Verdict {
  std::string check;
  KupischSeries algebra;
  Status status = Status::holds;
  std::string reason;  // set for skipped verdicts
  json witness;        // set for counterexamples, optionally for holds
};

inline void to_json(json& j, const Verdict& v) {
  j = json{{"check", v.check},
           {"algebra", to_string(v.algebra)},
           {"status", to_cstring(v.status)}};
  if (v.status == Status::skipped) j["reason"] = v.reason;
  if (!v.witness.is_null()) j["witness"] = v.witness;
}

namespace detail {

inline std::string replay_selfext(const KupischSeries& A, const Indecomposable& M) {
  return "nakhom selfext --series " + to_string(A) + " --m " + to_string(M);
}

inline std::string replay_module(const KupischSeries& A, const Indecomposable& M) {
  return "nakhom module --series " + to_string(A) + " --m " + to_string(M);
}

inline std::string replay_ext(const KupischSeries& A, const Indecomposable& N,
                              const Indecomposable& M, int degree) {
  return "nakhom ext --series " + to_string(A) + " --from " + to_string(N) +
         " --to " + to_string(M) + " --max-degree " + std::to_string(degree);
}

inline Verdict holds(std::string check, const KupischSeries& A, json witness = {}) {
  return {std::move(check), A, Status::holds, "", std::move(witness)};
}

inline Verdict skipped(std::string check, const KupischSeries& A, std::string why) {
  return {std::move(check), A, Status::skipped, std::move(why), {}};
}

inline Verdict counterexample(std::string check, const KupischSeries& A,
                              json witness) {
  return {std::move(check), A, Status::counterexample, "", std::move(witness)};
}

// Shared by the real check and the deliberately corrupted test hook.
inline Verdict nonrigidity_criterion_impl(const KupischSeries& A,
                                          std::string check, bool corrupt) {
  for (const auto& M : all_modules(A)) {
    const bool rigid = is_rigid(A, M);
    const bool criterion = nonrigidity_criterion(A, M);
    const bool expected = corrupt ? criterion : !criterion;
    if (rigid != expected)
      return counterexample(std::move(check), A,
                            json{{"module", to_string(M)},
                                 {"is_rigid", rigid},
                                 {"criterion", criterion},
                                 {"replay", replay_selfext(A, M)}});
  }
  return holds(std::move(check), A);
}

}  // namespace detail

/// All indecomposables satisfy: rigid iff NOT (n <= k <= c_i - n).
inline Verdict check_nonrigidity_criterion(const KupischSeries& A) {
  return detail::nonrigidity_criterion_impl(A, "nonrigidity_criterion", false);
}

/// Ext^1(N, M) = Hom(Omega(N), M) on every pair with t >= k, N non-projective.
inline Verdict check_ext1_lemma(const KupischSeries& A) {
  for (const auto& N : all_modules(A)) {
    if (is_projective(A, N)) continue;
    for (const auto& M : all_modules(A)) {
      if (N.length < M.length) continue;
      const int lemma = ext1_via_lemma(A, N, M);
      const int engine = ext_dims(A, N, M, 1).dims[1];
      if (lemma != engine)
        return detail::counterexample(
            "ext1_lemma", A,
            json{{"from", to_string(N)},
                 {"to", to_string(M)},
                 {"hom_syzygy", lemma},
                 {"ext1", engine},
                 {"replay", detail::replay_ext(A, N, M, 1)}});
    }
  }
  return detail::holds("ext1_lemma", A);
}

/// Syzygies of non-rigid modules are non-rigid.
inline Verdict check_syzygy_preserves_nonrigid(const KupischSeries& A) {
  for (const auto& M : all_modules(A)) {
    if (is_rigid(A, M)) continue;
    const auto s = syzygy(A, M);  // non-rigid modules are never projective
    if (!s || is_rigid(A, *s))
      return detail::counterexample(
          "syzygy_preserves_nonrigid", A,
          json{{"module", to_string(M)},
               {"syzygy", s ? json(to_string(*s)) : json(nullptr)},
               {"replay", s ? detail::replay_selfext(A, *s)
                            : detail::replay_selfext(A, M)}});
  }
  return detail::holds("syzygy_preserves_nonrigid", A);
}

/// Non-rigid modules have infinite projective and injective dimension.
inline Verdict check_nonrigid_infinite_dims(const KupischSeries& A) {
  for (const auto& M : all_modules(A)) {
    if (is_rigid(A, M)) continue;
    const auto pd = projective_dimension(A, M);
    const auto id = injective_dimension(A, M);
    if (pd || id)
      return detail::counterexample("nonrigid_infinite_dims", A,
                                    json{{"module", to_string(M)},
                                         {"pd", json_dim(pd)},
                                         {"injdim", json_dim(id)},
                                         {"replay", detail::replay_module(A, M)}});
  }
  return detail::holds("nonrigid_infinite_dims", A);
}

/// Finite global dimension forces every indecomposable to be rigid.
inline Verdict check_finite_gldim_rigid(const KupischSeries& A) {
  const auto g = global_dimension(A);
  if (!g)
    return detail::skipped("finite_gldim_rigid", A, "infinite global dimension");
  for (const auto& M : all_modules(A))
    if (!is_rigid(A, M))
      return detail::counterexample("finite_gldim_rigid", A,
                                    json{{"module", to_string(M)},
                                         {"gldim", *g},
                                         {"replay", detail::replay_selfext(A, M)}});
  return detail::holds("finite_gldim_rigid", A);
}

/// The Loewy-length bounds: L(A) >= 2n yields the constructive non-rigid
/// witness M(i, n); finite global dimension forces L(A) <= 2n - 1.
inline Verdict check_loewy_bounds(const KupischSeries& A) {
  const int L = loewy_length(A);
  const int n = A.n();
  bool applied = false;
  json witness;
  if (L >= 2 * n) {
    applied = true;
    const auto w = find_nonrigid_witness(A);
    if (!w)
      return detail::counterexample(
          "loewy_bounds", A,
          json{{"loewy_length", L}, {"missing_witness", true}});
    if (is_rigid(A, *w))
      return detail::counterexample("loewy_bounds", A,
                                    json{{"module", to_string(*w)},
                                         {"loewy_length", L},
                                         {"replay", detail::replay_selfext(A, *w)}});
    witness = json{{"module", to_string(*w)},
                   {"replay", detail::replay_selfext(A, *w)}};
  }
  if (const auto g = global_dimension(A)) {
    applied = true;
    if (L > 2 * n - 1)
      return detail::counterexample(
          "loewy_bounds", A,
          json{{"gldim", *g},
               {"loewy_length", L},
               {"bound", 2 * n - 1},
               {"replay", "nakhom gldim --series " + to_string(A)}});
  }
  if (!applied)
    return detail::skipped("loewy_bounds", A,
                           "Loewy length below 2n and infinite global dimension");
  return detail::holds("loewy_bounds", A, std::move(witness));
}

/// Selfinjective case: every non-rigid module has non-vanishing
/// selfextensions in all degrees up to the horizon plus a positive
/// periodicity certificate, and for k <= w/2 the Ext dimensions equal the
/// Hom(Omega^l, -) dimensions through two full syzygy periods.
inline Verdict check_selfinjective_all_degrees(const KupischSeries& A,
                                               int horizon = 50) {
  if (!is_selfinjective(A))
    return detail::skipped("selfinjective_all_degrees", A, "not selfinjective");
  const int w = loewy_length(A);
  const int n = A.n();
  json witness;
  for (const auto& M : all_modules(A)) {
    if (is_projective(A, M)) continue;
    if (!is_rigid(A, M)) {
      const auto profile = ext_dims(A, M, M, horizon);
      for (int l = 1; l <= horizon; ++l)
        if (profile.dims[l] == 0)
          return detail::counterexample(
              "selfinjective_all_degrees", A,
              json{{"module", to_string(M)},
                   {"vanishing_degree", l},
                   {"replay", detail::replay_selfext(A, M)}});
      const auto cert = has_infinitely_many_selfext(A, M);
      if (!cert.infinite)
        return detail::counterexample(
            "selfinjective_all_degrees", A,
            json{{"module", to_string(M)},
                 {"certificate", cert},
                 {"replay", detail::replay_selfext(A, M)}});
      if (witness.is_null())
        witness = json{{"module", to_string(M)},
                       {"replay", detail::replay_selfext(A, M)}};
    }
    if (2 * M.length <= w) {
      const int reach = 2 * n * w;
      const auto profile = ext_dims(A, M, M, reach);
      for (int l = 1; l <= reach; ++l) {
        const int hom = hom_syzygy_dim(A, M, l);
        if (hom != profile.dims[l])
          return detail::counterexample(
              "selfinjective_all_degrees", A,
              json{{"module", to_string(M)},
                   {"degree", l},
                   {"ext_dim", profile.dims[l]},
                   {"hom_syzygy_dim", hom},
                   {"replay", detail::replay_selfext(A, M)}});
      }
    }
  }
  return detail::holds("selfinjective_all_degrees", A, std::move(witness));
}

/// Gorenstein case: every non-rigid module has selfextensions in infinitely
/// many degrees, certified by orbit periodicity.
inline Verdict check_gorenstein_infinitely_many(const KupischSeries& A) {
  const auto g = gorenstein(A);
  if (!g.is_gorenstein)
    return detail::skipped("gorenstein_infinitely_many", A, "not Gorenstein");
  for (const auto& M : all_modules(A)) {
    if (is_rigid(A, M)) continue;
    const auto cert = has_infinitely_many_selfext(A, M);
    if (!cert.infinite)
      return detail::counterexample(
          "gorenstein_infinitely_many", A,
          json{{"module", to_string(M)},
               {"certificate", cert},
               {"replay", detail::replay_selfext(A, M)}});
  }
  return detail::holds("gorenstein_infinitely_many", A);
}

/// The Kupisch series (2, 2, ..., 2, 3) on n vertices: global dimension n,
/// a unique simple with projective dimension n whose degree-n
/// selfextensions survive, and the length-2 module over the last vertex
/// separating Ext^n from Hom(Omega^n, -).
inline Verdict reproduce_example_223(int n) {
  assert(n >= 2);
  std::vector<int> series(n, 2);
  series.back() = 3;
  const auto A = KupischSeries::validate(Kind::cyclic, std::move(series));
  const auto fail = [&](json w) {
    return detail::counterexample("example_223", A, std::move(w));
  };

  const auto g = global_dimension(A);
  if (g != n) return fail(json{{"gldim", json_dim(g)}, {"expected", n}});

  std::vector<int> with_pd_n;
  for (int i = 0; i < n; ++i)
    if (projective_dimension(A, {i, 1}) == n) with_pd_n.push_back(i);
  if (with_pd_n != std::vector<int>{0})
    return fail(json{{"simples_with_pd_n", with_pd_n}});
  const Indecomposable S0{0, 1};
  const int ext_n_simple = ext_dims(A, S0, S0, n).dims[n];
  if (ext_n_simple == 0)
    return fail(json{{"module", to_string(S0)}, {"ext_n", 0}});

  const Indecomposable M{n - 1, 2};
  std::vector<int> expected_dv(n, 0);
  expected_dv[0] = expected_dv[n - 1] = 1;
  if (dimension_vector(A, M) != expected_dv)
    return fail(json{{"module", to_string(M)}, {"bad_dimension_vector", true}});
  const int ext_n = ext_dims(A, M, M, n).dims[n];
  const int hom_n = hom_syzygy_dim(A, M, n);
  if (ext_n != 0 || hom_n != 1)
    return fail(json{{"module", to_string(M)},
                     {"ext_n", ext_n},
                     {"hom_syzygy_n", hom_n}});

  return detail::holds("example_223", A,
                       json{{"n", n},
                            {"gldim", *g},
                            {"simple", to_string(S0)},
                            {"ext_n_simple", ext_n_simple},
                            {"module", to_string(M)},
                            {"ext_n_module", ext_n},
                            {"hom_syzygy_n_module", hom_n},
                            {"replay", detail::replay_ext(A, M, M, n)}});
}

/// K[x]/(x^3) with M its radical: Ext^2(M, M) is 1-dimensional while
/// Hom(Omega^2 M, M) is 2-dimensional, and Omega^2(M) = M.
inline Verdict reproduce_example_kx3() {
  const auto A = KupischSeries::validate(Kind::cyclic, {3});
  const Indecomposable M{0, 2};
  const int ext2 = ext_dims(A, M, M, 2).dims[2];
  const int hom2 = hom_syzygy_dim(A, M, 2);
  const bool periodic = syzygy_orbit(A, M).state(2) == M;
  if (ext2 != 1 || hom2 != 2 || !periodic)
    return detail::counterexample("example_kx3", A,
                                  json{{"ext_2", ext2},
                                       {"hom_syzygy_2", hom2},
                                       {"omega2_is_M", periodic}});
  return detail::holds("example_kx3", A,
                       json{{"module", to_string(M)},
                            {"ext_2", ext2},
                            {"hom_syzygy_2", hom2},
                            {"omega2_is_M", periodic},
                            {"replay", detail::replay_ext(A, M, M, 2)}});
}

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "nonrigidity_criterion",    "ext1_lemma",
      "syzygy_preserves_nonrigid", "nonrigid_infinite_dims",
      "finite_gldim_rigid",       "loewy_bounds",
      "selfinjective_all_degrees", "gorenstein_infinitely_many"};
  return names;
}

/// Dispatch by check id.  The extra id "_selftest_corrupt" runs a
/// deliberately inverted criterion; it exists so the harness's
/// counterexample path stays tested.
inline Verdict run_check(const std::string& name, const KupischSeries& A,
                         int horizon = 50) {
  if (name == "nonrigidity_criterion") return check_nonrigidity_criterion(A);
  if (name == "ext1_lemma") return check_ext1_lemma(A);
  if (name == "syzygy_preserves_nonrigid") return check_syzygy_preserves_nonrigid(A);
  if (name == "nonrigid_infinite_dims") return check_nonrigid_infinite_dims(A);
  if (name == "finite_gldim_rigid") return check_finite_gldim_rigid(A);
  if (name == "loewy_bounds") return check_loewy_bounds(A);
  if (name == "selfinjective_all_degrees")
    return check_selfinjective_all_degrees(A, horizon);
  if (name == "gorenstein_infinitely_many")
    return check_gorenstein_infinitely_many(A);
  if (name == "_selftest_corrupt")
    return detail::nonrigidity_criterion_impl(A, "_selftest_corrupt", true);
  throw std::invalid_argument("unknown check '" + name + "'");
}

struct SurveyOptions {
  Kind kind = Kind::cyclic;
  int n_min = 1;
  int n_max = 1;
  int max_loewy = 2;
  std::vector<std::string> checks;  // empty or {"all"} = every check
  bool dedupe = false;
  int jobs = 1;
  int horizon = 50;
};

struct SurveySummary {
  long algebras = 0;
  long verdicts = 0;
  long holds = 0;
  long counterexamples = 0;
  long skipped = 0;
  std::vector<std::string> notes;
};

inline void to_json(json& j, const SurveySummary& s) {
  j = json{{"algebras", s.algebras},
           {"verdicts", s.verdicts},
           {"holds", s.holds},
           {"counterexamples", s.counterexamples},
           {"skipped", s.skipped},
           {"notes", s.notes}};
}

/// Run the selected checks over every enumerated algebra, delivering
/// verdicts to the sink in canonical order (algebras in enumeration order,
/// checks in the given order) independent of the worker count.
inline SurveySummary survey(const SurveyOptions& opts,
                            const std::function<void(const Verdict&)>& sink) {
  std::vector<std::string> checks = opts.checks;
  if (checks.empty() || (checks.size() == 1 && checks[0] == "all"))
    checks = all_check_names();
  for (const auto& c : checks)
    if (c != "_selftest_corrupt" &&
        std::find(all_check_names().begin(), all_check_names().end(), c) ==
            all_check_names().end())
      throw std::invalid_argument("unknown check '" + c + "'");

  SurveySummary summary;
  std::vector<KupischSeries> algebras;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    if (opts.kind == Kind::linear && n == 1) {
      summary.notes.push_back("linear n=1 excluded (semisimple)");
      continue;
    }
    for (auto& A : enumerate(opts.kind, n, opts.max_loewy, opts.dedupe))
      algebras.push_back(std::move(A));
  }
  summary.algebras = static_cast<long>(algebras.size());

  std::vector<std::vector<Verdict>> slots(algebras.size());
  const auto work = [&](size_t idx) {
    slots[idx].reserve(checks.size());
    for (const auto& c : checks)
      slots[idx].push_back(run_check(c, algebras[idx], opts.horizon));
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || algebras.size() <= 1) {
    for (size_t i = 0; i < algebras.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < algebras.size();
             i = next.fetch_add(1)) {
          try {
            work(i);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const auto& verdicts : slots)
    for (const auto& v : verdicts) {
      ++summary.verdicts;
      switch (v.status) {
        case Status::holds: ++summary.holds; break;
        case Status::counterexample: ++summary.counterexamples; break;
        case Status::skipped: ++summary.skipped; break;
      }
      sink(v);
    }
  return summary;
}

}  // namespace nakhom
