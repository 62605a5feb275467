#pragma once

// JSON (de)serialization for every on-disk format the tools speak.
//
// Conventions shared by all documents:
//   * rationals are canonical strings: "p" for integers, "p/q" with q > 0
//     and gcd(p, q) = 1 otherwise;
//   * indices inside files are 0-based (documentation and witness messages
//     stay 1-based);
//   * writers emit nlohmann::ordered_json with a fixed key order, so output
//     is byte-stable across runs.
//
// Document shapes:
//   endomorphism  {"model": "matrix", "n": 2, "scalars": "rational",
//                  "A": [[[[...]]]]}            A[i][j][k][l], 0-based
//                 polynomial entries: "scalars": "poly" plus a "variables"
//                 list; each entry is then a term list (see below).
//   ideal         {"variables": [...], "order": "degrevlex" | "lex",
//                  "generators": [poly, ...]}
//   polynomial    [{"coeff": "p/q", "exps": [e1, ..., ev]}, ...]
//   span          {"n": 2, "span": [[...], ...]}  each inner list one
//                 n^2-vector over the matrix units E_{1,1}, E_{1,2}, ...
//                 (row-major), i.e. one basis element of the subalgebra.
//   matrix        row-major nested lists of rational strings.

#include <stdexcept>
#include <string>
#include <variant>

#include "claims.hpp"
#include "endo.hpp"
#include "groebner.hpp"
#include "json.hpp"
#include "linalg.hpp"
#include "subalg.hpp"
#include "tensor.hpp"

namespace frobkit {

using Json = nlohmann::ordered_json;

/// Thrown when a document is syntactically valid JSON but does not match
/// the expected schema.  what() pins the offending location in JSON-pointer
/// style, e.g. "$.A[0][1]: expected a rational string".
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- Rationals --------------------------------------------------------------

/// Reads a "p/q" string at `where` (location text for error messages).
Rat rat_from_json(const Json& j, const std::string& where);

// --- Matrices and tensors ---------------------------------------------------

Json mat_to_json(const RatMat& m);
RatMat mat_from_json(const Json& j, const std::string& where);

/// {"d": ..., "in_arity": p, "out_arity": q, "matrix": [[...]]}.
Json tensor_to_json(const TensorMap& t);

// --- Endomorphisms ----------------------------------------------------------

using AnyEndo = std::variant<Endo, PolyEndo>;

Json endo_to_json(const Endo& t);
Json endo_to_json(const PolyEndo& t);
AnyEndo endo_from_json(const Json& j);
/// Like endo_from_json but rejects "scalars": "poly" documents.
Endo rational_endo_from_json(const Json& j);

// --- Polynomials and ideals -------------------------------------------------

Json poly_to_json(const MPoly& p);
MPoly poly_from_json(const RingPtr& ring, const Json& j, const std::string& where);

Json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

/// The input ideal plus the reduced basis, in the same polynomial format.
Json groebner_to_json(const GroebnerBasis& gb);

// --- Spans ------------------------------------------------------------------

struct SpanFile {
  int n = 0;     // ambient matrix size
  RatMat span;   // n^2 x r, one column per basis element
};

Json span_to_json(const SpanFile& s);
SpanFile span_from_json(const Json& j);

// --- Reports ----------------------------------------------------------------

Json witness_to_json(const Witness& w);
Json report_to_json(const PredicateReport<Rat>& r);
Json report_to_json(const PredicateReport<MPoly>& r);
Json claim_report_to_json(const ClaimReport& r);
Json embedding_report_to_json(const EmbeddingReport& r);

/// Everything `split` produces: the factorization, the induced structure
/// (structure constants, unit, counit, comultiplication in the image
/// basis), and the embedding verification.
Json split_bundle_to_json(const SplitData& split, const InducedAlgebra& induced,
                          const EmbeddingReport& embedding);

// --- Files ------------------------------------------------------------------

/// Parses the file at `path`.  Malformed JSON or an unreadable file raises
/// JsonFormatError whose message contains the path and, for parse errors,
/// the byte offset reported by the parser.
Json load_json_file(const std::string& path);

/// Canonical text form: two-space indent, trailing newline.
std::string dump_json(const Json& j);

void save_json_file(const std::string& path, const Json& j);

}  // namespace frobkit
