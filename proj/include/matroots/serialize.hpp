#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "matroots/matrix.hpp"
#include "matroots/roots.hpp"
#include "matroots/search.hpp"

namespace matroots {

// Matrices serialize as arrays of rows.  Entries that fit in int64 are plain
// JSON integers; anything larger becomes a decimal string.  The reader takes
// either form.
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const RatMatrix& m);  // entries "p" or "p/q"
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

// inline text ("a b; c d"), or JSON when the string starts with '['
IntMatrix parse_matrix_auto(const std::string& text);

nlohmann::json to_json(const Root& r);
nlohmann::json to_json(const RootSet& rs);

nlohmann::json to_json(const EquivClass& c);
nlohmann::json to_json(const ProblemSpec& spec);
nlohmann::json to_json(const SearchReport& rep);  // everything, solutions inline

// one summary record, then one record per solution with its canonical form
// and class id under rep.class_order; extra fields are merged into the
// summary record (run config echo etc.)
void write_jsonl(std::ostream& os, const SearchReport& rep,
                 const nlohmann::json& extra = nlohmann::json::object());

// parameter mini-grammar over Q(zeta_12): signed sums of products of
//   rational ("p" or "p/q") | i | s3 (= sqrt 3) | z12 ["^" exponent]
CycNumber parse_cyc12(const std::string& text);

nlohmann::json to_json(const RandomSearchState& st);
RandomSearchState state_from_json(const nlohmann::json& j);
void write_checkpoint(const std::string& path, const RandomSearchState& st);
RandomSearchState read_checkpoint(const std::string& path);

}  // namespace matroots
