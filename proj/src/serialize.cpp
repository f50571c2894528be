#include "matroots/serialize.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <map>

#include "matroots/canon.hpp"

namespace matroots {

using nlohmann::json;

nlohmann::json to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(ErrorCode::ParseError, "expected integer or decimal string");
}

nlohmann::json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); i++) {
    json row = json::array();
    for (int j = 0; j < m.dim(); j++) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); i++) {
    json row = json::array();
    for (int j = 0; j < m.dim(); j++) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "matrix JSON must be a nonempty array of rows");
  int n = static_cast<int>(j.size());
  IntMatrix m(n);
  for (int i = 0; i < n; i++) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(ErrorCode::ParseError, "matrix JSON must be square with equal-length rows");
    for (int k = 0; k < n; k++) m.at(i, k) = int_from_json(row[static_cast<size_t>(k)]);
  }
  return m;
}

IntMatrix parse_matrix_auto(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
  if (i < text.size() && text[i] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail(ErrorCode::ParseError, std::string("bad matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  return parse_matrix_text(text);
}

nlohmann::json to_json(const Root& r) {
  json out;
  out["indices"] = r.indices;
  out["real"] = r.is_real;
  out["rational"] = r.rational.has_value();
  out["integral"] = r.integral.has_value();
  if (r.integral) out["matrix_int"] = to_json(*r.integral);
  else if (r.rational) out["matrix_rat"] = to_json(*r.rational);
  json rows = json::array();
  for (int i = 0; i < r.matrix.dim(); i++) {
    json row = json::array();
    for (int j = 0; j < r.matrix.dim(); j++) row.push_back(r.matrix.at(i, j).str());
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  json approx = json::array();
  for (const auto& row : r.matrix.approx()) {
    json arow = json::array();
    for (const auto& z : row) arow.push_back(json::array({z.real(), z.imag()}));
    approx.push_back(std::move(arow));
  }
  out["approx"] = std::move(approx);
  return out;
}

nlohmann::json to_json(const RootSet& rs) {
  json out;
  out["base"] = to_json(rs.base);
  out["exponent"] = rs.exponent;
  out["conductor"] = rs.field ? rs.field->conductor() : 1;
  out["count"] = rs.roots.size();
  long real_count = 0;
  json roots = json::array();
  for (const Root& r : rs.roots) {
    if (r.is_real) real_count++;
    roots.push_back(to_json(r));
  }
  out["real_count"] = real_count;
  out["roots"] = std::move(roots);
  return out;
}

nlohmann::json to_json(const EquivClass& c) {
  return json{{"representative", to_json(c.representative)}, {"count", c.count}};
}

nlohmann::json to_json(const ProblemSpec& spec) {
  json out;
  switch (spec.kind) {
    case ProblemKind::MinConcatNorm: out["problem"] = "i"; break;
    case ProblemKind::MinProductNorm: out["problem"] = "ii"; break;
    case ProblemKind::MinProductNormZerofree: out["problem"] = "iii"; break;
  }
  out["n"] = spec.n;
  if (!spec.lambda.empty()) {
    json lam = json::array();
    for (const Int& v : spec.lambda) lam.push_back(to_json(v));
    out["lambda"] = std::move(lam);
  }
  if (spec.m_bound > 0) out["m_bound"] = spec.m_bound;
  if (spec.b_max > 0) out["b_max"] = spec.b_max;
  return out;
}

namespace {

const char* order_name(MatrixOrder o) {
  return o == MatrixOrder::RowMajorLex ? "row-major" : "structural";
}

json summary_json(const SearchReport& rep) {
  json out;
  out["spec"] = to_json(rep.spec);
  out["found"] = rep.found;
  out["minimal_norm"] = rep.minimal_norm ? to_json(*rep.minimal_norm) : json();
  out["count"] = rep.count;
  out["explored"] = rep.explored;
  out["runtime_sec"] = rep.runtime_sec;
  if (rep.seed) out["seed"] = *rep.seed;
  if (rep.seed) out["iterations_done"] = rep.iterations_done;
  out["complete"] = rep.complete;
  out["workers"] = rep.workers;
  out["status"] = rep.status;
  out["order"] = order_name(rep.class_order);
  if (rep.classes) {
    json cls = json::array();
    for (const EquivClass& c : *rep.classes) cls.push_back(to_json(c));
    out["classes"] = std::move(cls);
  }
  return out;
}

json solution_json(const Solution& s) {
  json out;
  out["matrix"] = to_json(s.matrix);
  if (s.inverse_int) out["inverse"] = to_json(*s.inverse_int);
  else if (s.inverse_rat) out["inverse"] = to_json(*s.inverse_rat);
  out["norm"] = to_json(s.norm);
  return out;
}

}  // namespace

nlohmann::json to_json(const SearchReport& rep) {
  json out = summary_json(rep);
  json sols = json::array();
  for (const Solution& s : rep.solutions) sols.push_back(solution_json(s));
  out["solutions"] = std::move(sols);
  return out;
}

void write_jsonl(std::ostream& os, const SearchReport& rep, const json& extra) {
  json head = summary_json(rep);
  head["type"] = "summary";
  if (extra.is_object())
    for (auto it = extra.begin(); it != extra.end(); ++it) head[it.key()] = it.value();
  os << head.dump() << "\n";

  // class ids follow the summary's class list when present, otherwise
  // first-seen canonical forms
  std::map<IntMatrix, long> class_id;
  if (rep.classes)
    for (size_t i = 0; i < rep.classes->size(); i++)
      class_id[(*rep.classes)[i].representative] = static_cast<long>(i);

  bool can_canon = !rep.solutions.empty() && rep.solutions.front().matrix.dim() <= 5;
  for (const Solution& s : rep.solutions) {
    json line = solution_json(s);
    line["type"] = "solution";
    if (can_canon) {
      IntMatrix canon = canonicalize(s.matrix, rep.class_order);
      auto it = class_id.find(canon);
      if (it == class_id.end())
        it = class_id.emplace(canon, static_cast<long>(class_id.size())).first;
      line["canonical_form"] = to_json(canon);
      line["class_id"] = it->second;
    }
    os << line.dump() << "\n";
  }
}

namespace {

struct Cyc12Parser {
  const std::string& s;
  size_t i = 0;
  FieldPtr f = CycField::get(12);

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { i++; return true; }
    return false;
  }
  [[noreturn]] void bad(const std::string& what) {
    fail(ErrorCode::ParseError, "parameter expression: " + what + " at offset " + std::to_string(i));
  }

  long integer() {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) i++;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      bad("expected integer");
    return std::stol(s.substr(start, i - start));
  }

  CycNumber factor() {
    skip();
    if (i >= s.size()) bad("expected factor");
    if (s[i] == '-') { i++; return -factor(); }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      long num = integer();
      if (eat('/')) {
        long den = integer();
        return CycNumber(f, make_rat(Int(num), Int(den)));
      }
      return CycNumber(f, Rat(num));
    }
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) i++;
    std::string word = s.substr(start, i - start);
    if (word == "i") return CycNumber::zeta(f, 3);
    if (word == "s3") return CycNumber::zeta(f, 1) + CycNumber::zeta(f, -1);
    if (word == "z12") {
      long k = eat('^') ? integer() : 1;
      return CycNumber::zeta(f, k);
    }
    bad("unknown symbol '" + word + "'");
  }

  CycNumber term() {
    CycNumber v = factor();
    while (eat('*')) v = v * factor();
    return v;
  }

  CycNumber expr() {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    CycNumber v = term();
    if (neg) v = -v;
    while (true) {
      skip();
      if (i >= s.size()) break;
      if (s[i] == '+') { i++; v = v + term(); }
      else if (s[i] == '-') { i++; v = v - term(); }
      else bad("unexpected character");
    }
    return v;
  }
};

}  // namespace

CycNumber parse_cyc12(const std::string& text) {
  Cyc12Parser p{text};
  CycNumber v = p.expr();
  return v;
}

nlohmann::json to_json(const RandomSearchState& st) {
  json out;
  out["seed"] = st.seed;
  out["iterations_done"] = st.iterations_done;
  out["best_norm"] = st.best_norm ? to_json(*st.best_norm) : json();
  json ws = json::array();
  for (const IntMatrix& w : st.witnesses) ws.push_back(to_json(w));
  out["witnesses"] = std::move(ws);
  return out;
}

RandomSearchState state_from_json(const json& j) {
  RandomSearchState st;
  try {
    st.seed = j.at("seed").get<uint64_t>();
    st.iterations_done = j.at("iterations_done").get<uint64_t>();
    if (!j.at("best_norm").is_null()) st.best_norm = int_from_json(j.at("best_norm"));
    for (const json& w : j.at("witnesses")) st.witnesses.push_back(matrix_from_json(w));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad checkpoint: ") + e.what());
  }
  return st;
}

void write_checkpoint(const std::string& path, const RandomSearchState& st) {
  std::ofstream os(path);
  if (!os) fail(ErrorCode::InvalidArgument, "cannot write checkpoint file " + path);
  os << to_json(st).dump(2) << "\n";
}

RandomSearchState read_checkpoint(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorCode::InvalidArgument, "cannot read checkpoint file " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad checkpoint JSON: ") + e.what());
  }
  return state_from_json(j);
}

}  // namespace matroots
