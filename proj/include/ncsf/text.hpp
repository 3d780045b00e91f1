#pragma once

// Text and JSON forms of every value the CLI reads or prints.

#include "ncsf/csym.hpp"
#include "ncsf/macmahon.hpp"
#include "ncsf/ncsym.hpp"
#include "ncsf/oracle.hpp"
#include "ncsf/rsk.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace ncsf {

using Json = nlohmann::ordered_json;

/// "3/2*h[1,3/2,4] - m[1,2,3]". Terms in other bases are converted into the basis
/// of the first term; a bare rational is a multiple of the unit; "0" is zero.
NCSymElement parse_ncsym(const std::string& text);
std::string to_string(const NCSymElement& f);

/// "2*m[3] + s[2,1]", same conventions with integer partitions in the brackets.
SymElement parse_sym(const std::string& text);
std::string to_string(const SymElement& f);

/// {"basis":"h","terms":[{"blocks":[[1,3],[2,4]],"coeff":"3/2"}]}
Json to_json(const NCSymElement& f);
NCSymElement ncsym_from_json(const Json& j);
/// {"basis":"s","terms":[{"parts":[2,1],"coeff":"1"}]}
Json to_json(const SymElement& f);
SymElement sym_from_json(const Json& j);
/// [{"word":[1,2,1,2],"coeff":"1"}, ...]
Json to_json(const WordPolynomial& P);
/// {"alphabets":2,"variables":2,"terms":[{"factors":[[1,1,2],[2,2,1]],"coeff":"3"}]}
/// where each factor is [subscript, dots, power].
Json to_json(const MultiPolynomial& P);
/// Rows of entries, each entry [value, dots].
Json to_json(const DottedTableau& T);
Json to_json(const Biword& beta);

/// "[2,2]"
DotVector parse_dot_vector(const std::string& text);
/// "{[1,0],[0,1]}"
VectorPartition parse_vector_partition(const std::string& text);
/// "2''" is value 2 with two dots. At least one dot is required.
DottedEntry parse_dotted_entry(const std::string& text);
/// Two nonblank lines: top row, then bottom row.
Biword parse_biword(const std::string& text);
/// Insertion tableau rows, a blank line, recording tableau rows.
std::pair<DottedTableau, DottedTableau> parse_tableau_pair(const std::string& text);
std::string to_string(const DottedTableau& T, const DottedTableau& U);

}  // namespace ncsf
