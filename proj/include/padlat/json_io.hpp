#pragma once

#include <json.hpp>

#include "padlat/oracle.hpp"
#include "padlat/relation.hpp"

namespace padlat {

// ordered_json keeps insertion order, so serialized envelopes are
// byte-identical across runs.
using Json = nlohmann::ordered_json;

/// {"p": .., "n": .., "generators": [[..], ..]} with canonical basis columns
/// as the generators.
Json lattice_to_json(const Lattice& l);

/// Reads the lattice envelope.  `where` names the input (file name, argument
/// position) for error messages.  ParseError identifies the offending field.
Lattice lattice_from_json(const Json& j, const std::string& where);

/// Adds "blocks": ["source", "target"] to the lattice envelope and doubles
/// the generator length.
Json relation_to_json(const Relation& h);
Relation relation_from_json(const Json& j, const std::string& where);

/// {"p": .., "n": .., "entries": [[row], ..]} for a square matrix.
Json matrix_to_json(const PadicContext& ctx, const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where, PadicContext* ctx_out);

std::vector<Scalar> vector_from_json(const Json& j, const std::string& where);
Json vector_to_json(const std::vector<Scalar>& v);

Json complex_distance_to_json(const ComplexDistance& k);
Json quotient_invariants_to_json(const QuotientInvariants& q);

/// Parses a whole document, mapping nlohmann syntax errors to ParseError.
Json parse_document(const std::string& text, const std::string& where);

} // namespace padlat
