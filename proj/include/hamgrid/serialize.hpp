#ifndef HAMGRID_SERIALIZE_HPP
#define HAMGRID_SERIALIZE_HPP

// Structured-text (JSON) formats. Rationals are [numerator, denominator]
// pairs of decimal strings; polynomials are ascending coefficient arrays.
// Every top-level document carries "format" and "version".

#include <optional>
#include <string>

#include "json.hpp"

#include "hamgrid/algebra.hpp"
#include "hamgrid/automaton.hpp"
#include "hamgrid/multipoly.hpp"

namespace hamgrid {

inline constexpr int kFormatVersion = 1;

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

/// {"format":"ratfunc","version":1,"numerator":[...],"denominator":[...]}
nlohmann::json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

/// {"format":"multipoly","version":1,"variables":[...],"terms":[[[e...],[n,d]],...]}
nlohmann::json to_json(const MultiPoly& p, const std::vector<std::string>& variables);
MultiPoly multipoly_from_json(const nlohmann::json& j);

/// {"format":"ss-automaton","version":1,"width":M,"states":[{"column":"1011",
///  "partition":[[1],[3,4]]},...],"successors":[[...],...]}
/// Successor lists use 0-based vertex ids: 0 = START, N+1 = END.
nlohmann::json to_json(const SSAutomaton& a);
SSAutomaton automaton_from_json(const nlohmann::json& j);

/// Writes text to path atomically (temporary file, then rename).
void write_file_atomic(const std::string& path, const std::string& text);
std::optional<std::string> read_file(const std::string& path);

std::optional<SSAutomaton> load_automaton_cache(const std::string& dir, int width);
void store_automaton_cache(const std::string& dir, const SSAutomaton& a);

}  // namespace hamgrid

#endif  // HAMGRID_SERIALIZE_HPP
