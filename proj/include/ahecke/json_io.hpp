#pragma once

// JSON documents for the command-line front end. Parsing failures raise
// Error(InvalidInput, "SchemaError").

#include <json.hpp>

#include "ahecke/hecke.hpp"
#include "ahecke/koszul.hpp"

namespace ahecke::io {

using json = nlohmann::json;

json read_file(const std::string& path);

Rational to_rational(const json& j);
json from_rational(const Rational& q);

/// {"type": "A1", "lattice": "adjoint"} or {"rank", "simple_roots", "simple_coroots"}.
/// A document with a "datum" member is unwrapped first.
RootDatum to_datum(const json& doc);
/// "parameters" {"q": "4"} or orbit labels; defaults to q = 1.
ParameterFunction to_parameters(const RootDatum& rd, const json& doc);

TorusPoint to_torus(const json& j, int rank);
json from_torus(const TorusPoint& t);
InductionDatum to_induction(const json& j, int rank);
json from_induction(const InductionDatum& xi);
MirrorSpec to_mirror(const json& j, int rank);
json from_mirror(const MirrorSpec& m);

/// Entries are numbers or [re, im].
CMatrix to_cmatrix(const json& j);
json from_complex(Complex z);
json from_cmatrix(const CMatrix& m);
IntMatrix to_imatrix(const json& j);
json from_imatrix(const IntMatrix& m);

CharacterVector to_character(const json& j, int order);
json from_character(const CharacterVector& c);

/// {"terms": [{"x": [int], "w": [[int]], "re", "im"}]}; w is the matrix on X, row by row.
HeckeElement to_element(const HeckeAlgebra& h, const json& j);
json from_element(const HeckeAlgebra& h, const HeckeElement& e);

/// {"group", "E_action", "V", "Vprime", "n_max"} with generator matrices;
/// optional "module" (E acting on V') and dims when there are no generators.
KoszulProblem to_koszul(const json& j);

json from_rgroup(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg);

}  // namespace ahecke::io
