#pragma once

#include <string>
#include <vector>

#include "hadamard/catalog.hpp"
#include "hadamard/euler_ode.hpp"
#include "hadamard/germ.hpp"
#include "hadamard/volterra.hpp"

namespace hadamard {

// JSON round-tripping, schema 1.  Complex numbers are always [re, im]
// pairs; documents carry a top-level "schema": 1.  Parsers throw
// InvalidParameters on malformed text or a schema they do not know.

std::string euler_operator_to_json(const EulerOperator& op);
EulerOperator euler_operator_from_json(const std::string& text);

std::string singular_jet_to_json(const SingularJet& jet);
SingularJet singular_jet_from_json(const std::string& text);

std::string rational_germ_to_json(const RationalGerm& germ);
RationalGerm rational_germ_from_json(const std::string& text);

std::string coefficients_to_json(const std::vector<Complex>& coeffs);
std::vector<Complex> coefficients_from_json(const std::string& text);

}  // namespace hadamard
