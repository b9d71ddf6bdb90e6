#pragma once
// JSON wire forms. Arc families travel as {"n": int, "levels": {"k": [sorted
// heads]}}, set families as {"n": int, "members": [[sorted points], ..]};
// exact fractions carry a "p/q" string with a convenience decimal next to
// it. Emitters return compact one-line text unless indent >= 0. Parsers
// validate domains and throw DomainError on malformed input. The JSON
// implementation stays private to this translation unit so the installed
// headers depend only on the standard library and boost.

#include "katona/averaging.hpp"
#include "katona/circle.hpp"
#include "katona/rational.hpp"
#include "katona/search.hpp"
#include "katona/theorems.hpp"

#include <string>

namespace katona {

std::string to_json_string(const ArcFamily& fam, int indent = -1);
ArcFamily arc_family_from_json(const std::string& text);

std::string to_json_string(const SetFamily& fam, int indent = -1);
SetFamily set_family_from_json(const std::string& text);

// {"fraction": "p/q", "decimal": "1.666667"}
std::string to_json_string(const Rational& r, int indent = -1);

std::string to_json_string(const SearchProblem& prob, int indent = -1);
SearchProblem search_problem_from_json(const std::string& text);

std::string to_json_string(const SearchReport& rep, int indent = -1);

// Report for one verification run: theorem id, the parameters it ran with,
// and the comparison of proven bound against achieved optimum.
std::string verify_report_json(const std::string& theorem_id,
                               const TheoremParams& params,
                               const TheoremResult& result, int indent = -1);

std::string to_json_string(const AverageReport& rep, int indent = -1);
std::string to_json_string(const SampleReport& rep, int indent = -1);

// Accepts either wire form; families of arcs parse to the realized point
// sets. Used by commands that take "some family" without caring which
// concrete shape produced it.
SetFamily any_family_from_json(const std::string& text);

} // namespace katona
