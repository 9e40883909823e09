#include <catch2/catch_amalgamated.hpp>

#include "nakhom/theorems.hpp"

using namespace nakhom;

namespace {

KupischSeries cyc(std::vector<int> c) {
  return KupischSeries::validate(Kind::cyclic, std::move(c));
}

}  // namespace

TEST_CASE("individual checks on known algebras") {
  CHECK(check_nonrigidity_criterion(cyc({4, 4})).status == Status::holds);
  CHECK(check_ext1_lemma(cyc({2, 3})).status == Status::holds);
  CHECK(check_syzygy_preserves_nonrigid(cyc({5, 5, 5})).status == Status::holds);
  CHECK(check_nonrigid_infinite_dims(cyc({4, 4})).status == Status::holds);

  const auto gl = check_finite_gldim_rigid(cyc({2, 3}));
  CHECK(gl.status == Status::holds);
  const auto gl_inf = check_finite_gldim_rigid(cyc({2, 2}));
  CHECK(gl_inf.status == Status::skipped);
  CHECK(gl_inf.reason == "infinite global dimension");

  const auto lb = check_loewy_bounds(cyc({2, 3}));
  CHECK(lb.status == Status::holds);  // gldim 2, L = 3 = 2n-1 boundary
  const auto lb_witness = check_loewy_bounds(cyc({4, 4}));
  CHECK(lb_witness.status == Status::holds);
  CHECK(lb_witness.witness["module"] == "0,2");
  const auto lb_skip = check_loewy_bounds(cyc({2, 2}));
  CHECK(lb_skip.status == Status::skipped);

  const auto sj = check_selfinjective_all_degrees(cyc({4, 4}), 50);
  CHECK(sj.status == Status::holds);
  CHECK(sj.witness["module"] == "0,2");
  CHECK(check_selfinjective_all_degrees(cyc({2, 3}), 50).status == Status::skipped);

  CHECK(check_gorenstein_infinitely_many(cyc({2, 3})).status == Status::holds);
  CHECK(check_gorenstein_infinitely_many(cyc({4, 4})).status == Status::holds);
  const auto ng = check_gorenstein_infinitely_many(cyc({2, 3, 3}));
  CHECK(ng.status == Status::skipped);
  CHECK(ng.reason == "not Gorenstein");
}

TEST_CASE("reproduced examples") {
  for (int n = 2; n <= 6; ++n) {
    const auto v = reproduce_example_223(n);
    CHECK(v.status == Status::holds);
    CHECK(v.witness["gldim"] == n);
    CHECK(v.witness["simple"] == "0,1");
    CHECK(v.witness["ext_n_module"] == 0);
    CHECK(v.witness["hom_syzygy_n_module"] == 1);
  }
  const auto v2 = reproduce_example_223(2);
  CHECK(v2.witness["ext_n_simple"] == 1);

  const auto kx3 = reproduce_example_kx3();
  CHECK(kx3.status == Status::holds);
  CHECK(kx3.witness["ext_2"] == 1);
  CHECK(kx3.witness["hom_syzygy_2"] == 2);
  CHECK(kx3.witness["omega2_is_M"] == true);
}

TEST_CASE("corrupted criterion produces a counterexample with replayable witness") {
  const auto v = run_check("_selftest_corrupt", cyc({2, 2}));
  REQUIRE(v.status == Status::counterexample);
  CHECK(v.witness.contains("module"));
  REQUIRE(v.witness.contains("replay"));
  const std::string replay = v.witness["replay"];
  CHECK(replay.find("nakhom selfext --series cyclic:2,2") == 0);
  CHECK_THROWS_AS(run_check("no_such_check", cyc({2, 2})), std::invalid_argument);
}

TEST_CASE("verdict JSON shape") {
  const auto v = check_finite_gldim_rigid(cyc({2, 2}));
  const json j = v;
  CHECK(j["check"] == "finite_gldim_rigid");
  CHECK(j["algebra"] == "cyclic:2,2");
  CHECK(j["status"] == "skipped");
  CHECK(j["reason"] == "infinite global dimension");
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("survey: counts, determinism, parallel merge") {
  SurveyOptions opts;
  opts.kind = Kind::cyclic;
  opts.n_min = 1;
  opts.n_max = 3;
  opts.max_loewy = 5;
  opts.dedupe = true;
  opts.jobs = 1;

  std::vector<std::string> sequential;
  const auto s1 = survey(opts, [&](const Verdict& v) {
    sequential.push_back(json(v).dump());
  });
  CHECK(s1.counterexamples == 0);
  CHECK(s1.verdicts == s1.algebras * static_cast<long>(all_check_names().size()));
  CHECK(s1.holds + s1.skipped == s1.verdicts);

  opts.jobs = 4;
  std::vector<std::string> parallel;
  const auto s4 = survey(opts, [&](const Verdict& v) {
    parallel.push_back(json(v).dump());
  });
  CHECK(sequential == parallel);
  CHECK(s4.algebras == s1.algebras);

  // the same sweep without dedupe covers every rotation
  opts.jobs = 1;
  opts.dedupe = false;
  long plain_count = 0;
  const auto s_all = survey(opts, [&](const Verdict&) { ++plain_count; });
  CHECK(s_all.verdicts == plain_count);
  CHECK(s_all.algebras >= s1.algebras);
}

TEST_CASE("survey counts algebras per the enumeration") {
  SurveyOptions opts;
  opts.kind = Kind::cyclic;
  opts.n_min = 2;
  opts.n_max = 2;
  opts.max_loewy = 3;
  opts.dedupe = true;
  const auto s = survey(opts, [](const Verdict&) {});
  CHECK(s.algebras == 3);  // [2,2], [2,3], [3,3]
}

TEST_CASE("survey: corrupt check surfaces counterexamples; linear n=1 noted") {
  SurveyOptions opts;
  opts.kind = Kind::cyclic;
  opts.n_min = 2;
  opts.n_max = 2;
  opts.max_loewy = 2;
  opts.checks = {"_selftest_corrupt"};
  long counterexamples = 0;
  const auto s = survey(opts, [&](const Verdict& v) {
    if (v.status == Status::counterexample) ++counterexamples;
  });
  CHECK(s.counterexamples == counterexamples);
  CHECK(counterexamples == 1);  // only [2,2] in range

  SurveyOptions lin_opts;
  lin_opts.kind = Kind::linear;
  lin_opts.n_min = 1;
  lin_opts.n_max = 2;
  lin_opts.max_loewy = 4;
  const auto ls = survey(lin_opts, [](const Verdict&) {});
  REQUIRE(ls.notes.size() == 1);
  CHECK(ls.notes[0] == "linear n=1 excluded (semisimple)");
  CHECK(ls.algebras == 1);

  SurveyOptions bad = opts;
  bad.checks = {"bogus"};
  CHECK_THROWS_AS(survey(bad, [](const Verdict&) {}), std::invalid_argument);
}

TEST_CASE("every check holds across a small exhaustive sweep") {
  SurveyOptions opts;
  opts.kind = Kind::cyclic;
  opts.n_min = 1;
  opts.n_max = 2;
  opts.max_loewy = 8;
  opts.horizon = 30;
  const auto s = survey(opts, [](const Verdict&) {});
  CHECK(s.counterexamples == 0);

  SurveyOptions lin_opts;
  lin_opts.kind = Kind::linear;
  lin_opts.n_min = 2;
  lin_opts.n_max = 5;
  lin_opts.max_loewy = 5;
  const auto ls = survey(lin_opts, [](const Verdict&) {});
  CHECK(ls.counterexamples == 0);
}
