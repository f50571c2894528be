#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "matroots/catalog.hpp"
#include "matroots/error.hpp"
#include "matroots/roots.hpp"
#include "matroots/search.hpp"
#include "matroots/serialize.hpp"

using namespace matroots;
using nlohmann::json;

TEST_CASE("matrix json round trip") {
  IntMatrix m = IntMatrix::rows({{1, -2}, {3, 4}});
  json j = to_json(m);
  REQUIRE(j.is_array());
  CHECK(j[0][1].is_number_integer());  // small entries stay numbers
  CHECK(matrix_from_json(j) == m);

  // big entries become decimal strings and still round-trip
  Int big = int_pow(Int(10), 25);
  IntMatrix h(2);
  h.at(0, 0) = big;
  h.at(0, 1) = 1;
  h.at(1, 0) = -2;
  h.at(1, 1) = -big;
  json jh = to_json(h);
  CHECK(jh[0][0].is_string());
  CHECK(matrix_from_json(jh) == h);

  // the reader takes either form
  CHECK(matrix_from_json(json::parse("[[1, \"2\"], [3, 4]]")) ==
        IntMatrix::rows({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1, 2], [3]]")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[1, 2]")), Error);

  RatMatrix r(2);
  r.at(0, 0) = Rat(1, 2);
  r.at(1, 1) = Rat(-3);
  json jr = to_json(r);
  CHECK(jr[0][0] == "1/2");
  CHECK(jr[1][1] == "-3");
}

TEST_CASE("int json") {
  CHECK(to_json(Int(42)) == json(42));
  CHECK(int_from_json(json(42)) == 42);
  Int big = int_pow(Int(7), 40);
  CHECK(int_from_json(to_json(big)) == big);
  CHECK(int_from_json(json("123")) == 123);
  CHECK_THROWS_AS(int_from_json(json("abc")), Error);
}

TEST_CASE("parse_matrix_auto") {
  CHECK(parse_matrix_auto("1 2; 3 4") == IntMatrix::rows({{1, 2}, {3, 4}}));
  CHECK(parse_matrix_auto("[[1,2],[3,4]]") == IntMatrix::rows({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(parse_matrix_auto("[[1,2],[3]]"), Error);
}

TEST_CASE("cyclotomic parameter grammar") {
  FieldPtr f = CycField::get(12);
  CycNumber z = CycNumber::zeta(f);
  CycNumber i = z.pow(3);
  CycNumber s3 = z + z.pow(-1);

  CHECK(parse_cyc12("1/2") == CycNumber(f, Rat(1, 2)));
  CHECK(parse_cyc12("i") == i);
  CHECK(parse_cyc12("s3") == s3);
  CHECK(parse_cyc12("z12") == z);
  CHECK(parse_cyc12("z12^3") == i);
  CHECK(parse_cyc12("i*s3") == i * s3);
  CHECK(parse_cyc12("-1+2*i") == CycNumber(f, Rat(-1)) + Rat(2) * i);
  CHECK(parse_cyc12(" 3/2 * s3 - z12 ") == Rat(3, 2) * s3 - z);
  CHECK(parse_cyc12("2*i*s3+1") == Rat(2) * i * s3 + CycNumber(f, Rat(1)));
  CHECK(parse_cyc12("0") == CycNumber(f, Rat(0)));

  CHECK_THROWS_AS(parse_cyc12("q"), Error);
  CHECK_THROWS_AS(parse_cyc12("z12^"), Error);
  CHECK_THROWS_AS(parse_cyc12(""), Error);
  CHECK_THROWS_AS(parse_cyc12("1 +"), Error);
}

TEST_CASE("root set json") {
  RootSet rs = enumerate_roots(integer_spectrum(catalog::b()), 2);
  json j = to_json(rs);
  CHECK(j["exponent"] == 2);
  CHECK(j["conductor"] == rs.field->conductor());
  CHECK(matrix_from_json(j["base"]) == catalog::b());
  REQUIRE(j["roots"].is_array());
  CHECK(j["roots"].size() == 4);
  int reals = 0;
  for (const json& r : j["roots"]) {
    CHECK(r.contains("indices"));
    CHECK(r.contains("real"));
    CHECK(r.contains("matrix"));  // exact cyclotomic entries as strings
    CHECK(r.contains("approx"));
    if (r["real"].get<bool>()) reals++;
    if (r["integral"].get<bool>())  // flag; the matrix itself sits next to it
      CHECK(matrix_from_json(r["matrix_int"]).dim() == 2);
  }
  CHECK(reals == j["real_count"].get<int>());
}

TEST_CASE("search report json and jsonl") {
  SearchReport rep = exhaustive_problem_ii({2, 3}, 3, false);
  json j = to_json(rep);
  CHECK(j["spec"]["problem"] == "ii");
  CHECK(j["minimal_norm"] == 4);
  CHECK(j["count"] == 32);
  CHECK(j["solutions"].size() == 8);
  CHECK(j["classes"].size() == 2);

  std::ostringstream os;
  write_jsonl(os, rep, json{{"run", "unit"}});
  std::istringstream is(os.str());
  std::string line;
  int lines = 0, solutions = 0;
  while (std::getline(is, line)) {
    json rec = json::parse(line);  // every line is standalone json
    if (lines == 0) {
      CHECK(rec["type"] == "summary");
      CHECK(rec["run"] == "unit");  // extra fields merge into the summary
      CHECK(rec["count"] == 32);
    } else {
      CHECK(rec["type"] == "solution");
      CHECK(rec.contains("canonical_form"));
      CHECK(rec.contains("class_id"));
      CHECK(rec["class_id"].get<long>() >= 0);
      CHECK(rec["class_id"].get<long>() <= 1);
      solutions++;
    }
    lines++;
  }
  CHECK(lines == 9);
  CHECK(solutions == 8);
}

TEST_CASE("checkpoint round trip") {
  SearchReport rep = randomized_zerofree_search(3, std::nullopt, 100, 13);
  RandomSearchState st = state_from_report(rep);
  CHECK(st.seed == 13);
  CHECK(st.iterations_done == 100);

  json j = to_json(st);
  RandomSearchState back = state_from_json(j);
  CHECK(back.seed == st.seed);
  CHECK(back.iterations_done == st.iterations_done);
  CHECK(back.best_norm == st.best_norm);
  CHECK(back.witnesses == st.witnesses);

  std::string path = "ck_roundtrip_test.json";
  write_checkpoint(path, st);
  RandomSearchState fromfile = read_checkpoint(path);
  CHECK(fromfile.witnesses == st.witnesses);
  CHECK(fromfile.best_norm == st.best_norm);
  std::remove(path.c_str());

  std::ofstream bad("ck_bad_test.json");
  bad << "{ not json";
  bad.close();
  CHECK_THROWS_AS(read_checkpoint("ck_bad_test.json"), Error);
  CHECK_THROWS_AS(read_checkpoint("ck_missing_test.json"), Error);
  std::remove("ck_bad_test.json");
}
