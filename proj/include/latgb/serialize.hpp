#pragma once

#include <json.hpp>
#include <string>

#include "latgb/groebner.hpp"
#include "latgb/lattice.hpp"
#include "latgb/quotient.hpp"
#include "latgb/snf.hpp"
#include "latgb/tensor.hpp"

namespace latgb {

// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Integers that fit int64 are emitted as JSON numbers, larger ones as
// decimal strings; readers accept both.
Json json_int(const Int& v);
Int int_from_json(const Json& j);

// {"ambient_dim": N, "basis": [[...], ...]}
Json lattice_to_json(const IntegerLattice& L);
IntegerLattice lattice_from_json(const Json& j);

// {"shape": [...], "entries": [...]} with the documented flat layout.
Json tensor_to_json(const CoeffTensor& t);
CoeffTensor tensor_from_json(const Json& j);

Json matrix_to_json(const MatZ& m);
Json basis_strings(const GroebnerBasis& G, const RingContext& ctx);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace latgb
