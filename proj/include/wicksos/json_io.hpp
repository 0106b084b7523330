#ifndef WICKSOS_JSON_IO_HPP
#define WICKSOS_JSON_IO_HPP

#include <string>

#include "wicksos/average.hpp"
#include "wicksos/certify.hpp"
#include "wicksos/fock.hpp"

namespace wicksos {

/// Schema violation while reading one of the JSON formats.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Certificate schema:
/// {n, hbar, mu, target, sos: [{lambda, g}], witness_h, verified,
///  meta: {k, design_ref, alpha?}}. Round-trips losslessly.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

/// Design schema: {n, m, atoms: [{lambda, v: [...], N}]}.
std::string design_to_json(const Design& d);
Design design_from_json(const std::string& text);

/// Matrix output: entries as strings plus the gram_weights sidecar.
std::string fock_matrix_to_json(const FockMatrix& m);

std::string herm_matrix_to_json(const HermMatrix& m);
HermMatrix herm_matrix_from_json(const std::string& text);

std::string psd_result_to_json(const PsdResult& r);

}  // namespace wicksos

#endif
