#ifndef SU2HOM_JSON_IO_HPP
#define SU2HOM_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "su2hom/abelian_group.hpp"
#include "su2hom/chain_complex.hpp"
#include "su2hom/closed_form.hpp"
#include "su2hom/int_matrix.hpp"

namespace su2hom {

// JSON object keys are emitted sorted (nlohmann keeps objects ordered), so
// parse + re-dump of any document produced here is byte-identical.

nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const IntMatrix& m);      // sparse triples, values as strings
nlohmann::json to_json(const ChainComplex& c);   // dims, labels, boundary triples
nlohmann::json to_json(const GroupTable& t);

std::string group_table_csv(const GroupTable& t);
std::string group_table_markdown(const GroupTable& t);

// quotes a CSV field only when it needs it
std::string csv_escape(const std::string& field);

}  // namespace su2hom

#endif
