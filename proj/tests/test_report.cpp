#include "doctest.h"

#include "sgcm/report.hpp"

using namespace sgcm;

namespace {

SessionFile& packaged(const std::string& file) {
  static std::map<std::string, SessionFile> cache;
  auto it = cache.find(file);
  if (it == cache.end())
    it = cache.emplace(file, parse_session(corpus_dir() + "/" + file)).first;
  return it->second;
}

SessionFile& mixed_fixture() {
  static SessionFile s = parse_session_text(
      "ring Q[x,y]\n"
      "ideal I = x*y\n"
      "module M = quot(I)\n"
      "module F = quot(0)\n"
      "filtration T on M = [ [0], [R] ]\n"
      "sop u on M = x + y\n"
      "sop v on F = x, y\n");
  return s;
}

}  // namespace

TEST_CASE("command reports carry the stable envelope and are deterministic") {
  SessionFile& s = packaged("example_5_6.sgcm");
  CommandOptions o;
  AnalysisReport r1 = run_command(s, "dimfilt", o);
  AnalysisReport r2 = run_command(s, "dimfilt", o);
  CHECK(r1.json.dump(2) == r2.json.dump(2));
  CHECK(r1.exit_code == 0);
  CHECK(r1.json["exit_code"] == 0);
  CHECK(r1.json["schema_version"] == 1);
  CHECK(r1.json["command"] == "dimfilt");
  CHECK(r1.json["tool"] == "sgcm");
  CHECK(r1.json["options"]["seed"] == 1);
  CHECK(r1.json["results"]["steps"] == 2);
  CHECK(r1.json["results"]["filtration"][1]["dimension"] == 2);
  CHECK(r1.json.count("timing_ms") == 0);
  CHECK(!r1.text.empty());

  SUBCASE("searches are reproducible for a fixed seed") {
    CommandOptions so;
    so.seed = 7;
    AnalysisReport a = run_command(s, "good-sop", so);
    AnalysisReport b = run_command(s, "good-sop", so);
    CHECK(a.json.dump() == b.json.dump());
    CHECK(a.text == b.text);
  }

  SUBCASE("timing is opt-in so default reports stay byte-stable") {
    CommandOptions to;
    to.timing = true;
    AnalysisReport r = run_command(s, "dimfilt", to);
    CHECK(r.json.count("timing_ms") == 1);
    CHECK(r.text.find("elapsed:") != std::string::npos);
  }
}

TEST_CASE("good-sop and dd-check verdicts on the packaged sessions") {
  SessionFile& s = packaged("example_5_6.sgcm");

  SUBCASE("declared parameters verify as good for both filtrations") {
    for (const char* f : {"D", "F"}) {
      CommandOptions o;
      o.filtration = f;
      o.sop = "q";
      AnalysisReport r = run_command(s, "good-sop", o);
      CAPTURE(f);
      CHECK(r.exit_code == 0);
      CHECK(r.json["verdicts"]["good"] == true);
      CHECK(r.json["results"]["mode"] == "verify");
      CHECK(r.json["results"]["is_sop"] == true);
    }
  }

  SUBCASE("search mode finds a witness and reports the seeds tried") {
    CommandOptions o;
    AnalysisReport r = run_command(s, "good-sop", o);
    CHECK(r.exit_code == 0);
    CHECK(r.json["verdicts"]["found"] == true);
    CHECK(r.json["results"]["seeds_tried"].get<int>() >= 1);
    CHECK(r.json["results"]["sop"].size() == 3);
  }

  SUBCASE("dd-check accepts the packaged parameters at bounds 2 and 3") {
    for (unsigned bound : {2u, 3u}) {
      CommandOptions o;
      o.sop = "q";
      o.bound = bound;
      AnalysisReport r = run_command(s, "dd-check", o);
      CHECK(r.exit_code == 0);
      CHECK(r.json["verdicts"]["dd_sequence"] == true);
      CHECK(r.json["results"]["is_d_sequence"] == true);
      CHECK(r.json["results"]["bound"] == bound);
    }
  }

  SUBCASE("dd-check requires a named parameter system") {
    CommandOptions o;
    CHECK_THROWS_AS(run_command(s, "dd-check", o), InputError);
  }
}

TEST_CASE("ifm tabulates the difference function over the exponent grid") {
  SessionFile& s = packaged("example_5_6.sgcm");
  CommandOptions o;
  o.filtration = "F";
  o.sop = "q";
  o.grid = 2;
  AnalysisReport r = run_command(s, "ifm", o);
  CHECK(r.exit_code == 0);
  CHECK(r.json["verdicts"]["nonnegative"] == true);
  CHECK(r.json["verdicts"]["monotone"] == true);
  const auto& rows = r.json["results"]["values"];
  CHECK(rows.size() == 8);  // {1,2}^3
  for (const auto& row : rows) CHECK(row["value"] == 0);
  // One entry per chain member 0..t; the 0th slot is the unused sentinel.
  CHECK(r.json["results"]["multiplicities"].size() == 3);
  CHECK(r.text.find("n1 n2 n3") != std::string::npos);

  SUBCASE("the dimension filtration of the same module gives zeros too") {
    CommandOptions od;
    od.sop = "q";
    od.grid = 1;
    AnalysisReport rd = run_command(s, "ifm", od);
    CHECK(rd.exit_code == 0);
    CHECK(rd.json["options"]["filtration"] == "(dimension filtration)");
    CHECK(rd.json["results"]["values"].size() == 1);
    CHECK(rd.json["results"]["values"][0]["value"] == 0);
  }
}

TEST_CASE("invariant command reports both routes") {
  SessionFile& s = packaged("example_5_6.sgcm");

  SUBCASE("the dimension filtration: both routes give 0") {
    CommandOptions o;
    o.filtration = "D";
    AnalysisReport r = run_command(s, "invariant", o);
    CHECK(r.exit_code == 0);
    CHECK(r.json["verdicts"]["routes_agree"] == true);
    CHECK(r.json["results"]["parametric"] == 0);
    CHECK(r.json["results"]["cohomological"] == 0);
    CHECK(r.json["results"]["gcm_filtration"] == "yes");
  }

  SUBCASE("F is rejected as a generalized Cohen-Macaulay filtration") {
    CommandOptions o;
    o.filtration = "F";
    AnalysisReport r = run_command(s, "invariant", o);
    CHECK(r.exit_code == 1);
    CHECK(r.json["verdicts"]["gcm_filtration"] == false);
    CHECK(r.json["results"]["gcm_filtration"] == "no");
  }
}

TEST_CASE("seq-gcm and seq-cm classify the packaged modules") {
  SUBCASE("the two-plane quotient is sequentially generalized CM and seq CM") {
    SessionFile& s = packaged("example_5_6.sgcm");
    CommandOptions o;
    AnalysisReport r = run_command(s, "seq-gcm", o);
    CHECK(r.exit_code == 0);
    CHECK(r.json["verdicts"]["seq_gcm"] == true);
    CHECK(r.json["results"]["invariant_parametric"] == 0);
    CHECK(r.json["results"]["invariant_cohomological"] == 0);
    CHECK(r.json["results"]["routes_agree"] == true);

    AnalysisReport rc = run_command(s, "seq-cm", o);
    CHECK(rc.exit_code == 0);
    CHECK(rc.json["verdicts"]["seq_cm"] == true);
  }

  SUBCASE("the direct sum with a non-CM top quotient is proven negative") {
    SessionFile& s = packaged("example_5_5.sgcm");
    CommandOptions o;
    AnalysisReport r = run_command(s, "seq-gcm", o);
    CHECK(r.exit_code == 1);
    CHECK(r.json["verdicts"]["seq_gcm"] == false);
    std::string status = r.json["results"]["status"];
    CHECK(status.rfind("proven negative", 0) == 0);
  }
}

TEST_CASE("hilbert-samuel fits the length polynomial and checks identities") {
  SUBCASE("packaged four-variable module") {
    SessionFile& s = packaged("example_5_6.sgcm");
    CommandOptions o;
    o.sop = "q";
    AnalysisReport r = run_command(s, "hilbert-samuel", o);
    CHECK(r.exit_code == 0);
    CHECK(r.json["verdicts"]["fit_exact"] == true);
    CHECK(r.json["verdicts"]["identities_pass"] == true);
    CHECK(r.json["results"]["coefficients"] == std::vector<long long>{1, 1, 0, 0});
    CHECK(r.json["results"]["adjusted_values"] == std::vector<long long>{0, 0, 0, 0});
    CHECK(r.json["results"]["values"].size() == 7);
    CHECK(r.json["results"]["values"][0]["n"] == 0);
  }

  SUBCASE("a free module in one variable has coefficients (1, 0)") {
    SessionFile s = parse_session_text("ring Q[x]\nmodule M = quot(0)\n");
    CommandOptions o;
    AnalysisReport r = run_command(s, "hilbert-samuel", o);
    CHECK(r.exit_code == 0);
    CHECK(r.json["results"]["coefficients"] == std::vector<long long>{1, 0});
    CHECK(r.json["verdicts"]["fit_exact"] == true);
  }

  SUBCASE("named systems must be parameter systems and dd-sequences") {
    SessionFile s = parse_session_text(
        "ring Q[x,y]\n"
        "ideal I = x^2, x*y^2\n"
        "module M = quot(I)\n"
        "sop not_dd on M = y\n"
        "sop not_sop on M = x\n");
    CommandOptions o;
    o.sop = "not_sop";
    CHECK_THROWS_AS(run_command(s, "hilbert-samuel", o), InputError);
    o.sop = "not_dd";
    try {
      run_command(s, "hilbert-samuel", o);
      FAIL("expected the dd-sequence precondition to fail");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("dd-sequence") != std::string::npos);
    }
  }
}

TEST_CASE("name resolution failures are input errors") {
  SessionFile& s = mixed_fixture();
  CommandOptions o;

  CHECK_THROWS_AS(run_command(s, "dimfilt", o), InputError);  // two modules
  o.module = "nope";
  CHECK_THROWS_AS(run_command(s, "dimfilt", o), InputError);
  o.module = "M";
  CHECK(run_command(s, "dimfilt", o).exit_code == 0);

  CommandOptions bad_f;
  bad_f.module = "F";
  bad_f.filtration = "T";  // declared on M
  CHECK_THROWS_AS(run_command(s, "good-sop", bad_f), InputError);

  CommandOptions bad_s;
  bad_s.module = "M";
  bad_s.sop = "v";  // declared on F
  CHECK_THROWS_AS(run_command(s, "good-sop", bad_s), InputError);

  CommandOptions ok;
  ok.module = "F";
  ok.sop = "v";
  CHECK(run_command(s, "good-sop", ok).exit_code == 0);

  CHECK_THROWS_AS(run_command(s, "frobnicate", o), InputError);
}

TEST_CASE("supplied decompositions flow through the commands") {
  SessionFile s = parse_session_text(
      "ring Q[x,y]\n"
      "ideal A = x^2 - x*y\n"
      "ideal Ax = x\n"
      "ideal Ad = x - y\n"
      "module M = quot(A)\n"
      "decomp A = [Ax, Ad]\n");
  CommandOptions o;
  AnalysisReport r = run_command(s, "dimfilt", o);
  CHECK(r.exit_code == 0);
  CHECK(r.json["results"]["steps"] == 1);

  AnalysisReport rs = run_command(s, "seq-cm", o);
  CHECK(rs.exit_code == 0);
  CHECK(rs.json["verdicts"]["seq_cm"] == true);
}

TEST_CASE("packaged example runner") {
  CommandOptions o;

  SUBCASE("identifiers normalize and unknown ids are input errors") {
    CHECK_THROWS_AS(run_paper_example("9.9", o), InputError);
    CHECK_THROWS_AS(run_paper_example("", o), InputError);
  }

  SUBCASE("the four-variable example verifies end to end") {
    AnalysisReport r = run_paper_example("5.6", o);
    CHECK(r.exit_code == 0);
    CHECK(r.json["verdicts"]["all_checks"] == true);
    CHECK(r.json["results"]["example"] == "5.6");
    CHECK(r.json["results"]["checks"].size() == 9);
    for (const auto& c : r.json["results"]["checks"]) CHECK(c["pass"] == true);
    CHECK(r.text.find("[ok]") != std::string::npos);
    CHECK(r.text.find("[FAIL]") == std::string::npos);

    AnalysisReport via_command =
        run_command(SessionFile{}, "verify-paper-example example_5_6.sgcm", o);
    CHECK(via_command.exit_code == 0);
    CHECK(via_command.json["results"]["example"] == "5.6");
  }
}
