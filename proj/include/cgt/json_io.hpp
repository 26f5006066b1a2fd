#pragma once

// JSON encodings for every serializable object in the library: PL2 maps,
// integer and mod-p matrices, free-product words, permutation group
// specs, width reports and conjugate certificates. Parsers validate all
// type invariants and throw std::invalid_argument naming the violation.

#include "cgt/finite.hpp"
#include "cgt/freeprod.hpp"
#include "cgt/intmatrix.hpp"
#include "cgt/modmatrix.hpp"
#include "cgt/pl2.hpp"
#include "cgt/sixconj.hpp"

#include <json.hpp>

#include <string>

namespace cgt {

using Json = nlohmann::json;

// Canonical text form: 2-space indent, trailing newline. Used everywhere
// output determinism matters.
std::string dump_json(const Json& j);

// PL2 maps: array of [x, y] pairs with dyadic strings "p/q".
Json pl2_to_json(const PL2Map& f);
PL2Map pl2_from_json(const Json& j);

Json pl2_certificate_to_json(const ConjugateCertificate<PL2Map>& c);
ConjugateCertificate<PL2Map> pl2_certificate_from_json(const Json& j);

// Commutator list for PL2 maps: array of [a, b] map pairs.
Json pl2_commutators_to_json(const CommutatorList<PL2Map>& cs);
CommutatorList<PL2Map> pl2_commutators_from_json(const Json& j);

// Integer matrices: nested arrays; entries are JSON integers when they
// fit in 64 bits and decimal strings otherwise.
Json intmatrix_to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const Json& j);

Json mat_certificate_to_json(const ConjugateCertificate<IntMatrix>& c);
ConjugateCertificate<IntMatrix> mat_certificate_from_json(const Json& j);

// Mod-p matrices carry the modulus: {"p": prime, "entries": [[...]]}.
Json modmatrix_to_json(const ModMatrix& m);
ModMatrix modmatrix_from_json(const Json& j);

// Factor spec: list of orders with "inf" for the infinite cyclic group.
Json factor_spec_to_json(const FactorSpec& spec);
FactorSpec factor_spec_from_json(const Json& j);

// Words: list of [factor_index, exponent] syllables.
Json fpword_to_json(const FPWord& w);
FPWord fpword_from_json(const FactorSpec& spec, const Json& j);

// {"spec": [...], "factors": [{"conjugator": word, "base": "a"|"b"}], ...}
Json z2z2_decomposition_to_json(const FactorSpec& spec, const Z2Z2Decomposition& d);
Z2Z2Decomposition z2z2_decomposition_from_json(const FactorSpec& spec, const Json& j);

// Permutations as cycle strings; group specs as
// {"degree": d, "generators": ["(0 1)", ...]}.
Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j, int degree);
Json group_spec_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json width_report_to_json(const WidthReport& r);
Json fp_width_report_to_json(const FpWidthReport& r);

}  // namespace cgt
