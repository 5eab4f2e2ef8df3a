#ifndef MCKATZ_JSON_IO_HPP
#define MCKATZ_JSON_IO_HPP

#include <cstdint>
#include <string>

#include "json.hpp"
#include "mckatz/catalog.hpp"
#include "mckatz/rigidity.hpp"
#include "mckatz/theta_op.hpp"
#include "mckatz/tuples.hpp"

namespace mckatz {

// Key order is kept stable so serialized output is byte-reproducible.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const CycloScalar& s);
CycloScalar scalar_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json tuple_to_json(const MonodromyTuple& t);
MonodromyTuple tuple_from_json(const Json& j);

Json jordan_to_json(const JordanData& jd);
JordanData jordan_from_json(const Json& j);

Json local_data_to_json(const LocalData& d);
LocalData local_data_from_json(const Json& j);

Json script_to_json(const OpScript& s);
OpScript script_from_json(const Json& j);

// x powers are stored relative to x_shift in {0, -1} so they stay
// nonnegative; theta coefficients are low degree first.
Json operator_to_json(const ThetaOperator& l);
ThetaOperator operator_from_json(const Json& j);

Json scheme_to_json(const RiemannScheme& s);
RiemannScheme scheme_from_json(const Json& j);

// Parses a JSON document, mapping failures to parse_error.
Json parse_json(const std::string& text, const std::string& what);

// Built-in objects by name: the catalog operators ("hypergeometric4",
// "selfadjoint4", "chain-product6", "two-j2"), the scripts
// ("construction-script", "reduction-script"), the reference local data
// ("two-j2-local", "wedge-local", "rank4-local", "sp4-local") and the tuple
// pipeline stages ("seed-tuple", "wedge-tuple", "rank4-tuple", "sp4-tuple",
// "two-j2-tuple", computed on demand).  Unknown names raise parse_error.
Json catalog_object_json(const std::string& name, long conductor);

std::string read_file(const std::string& path);
uint32_t crc32_bytes(const std::string& data);

// Directory holding the golden files: $MCKATZ_GOLDEN_DIR or data/golden.
std::string golden_dir();

// Loads a golden file after checking its crc32 against manifest.json in the
// same directory.
Json load_golden(const std::string& filename);

} // namespace mckatz

#endif
