#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "arrcover/arrangement.hpp"

namespace arrcover::cli {

/// Malformed input: bad file contents, bad flags, unknown catalog keys.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ArrangementFile {
    std::string name;
    Arrangement arrangement;
};

/*
 * File format (JSON):
 *
 *   {
 *     "ambient_dim": 2,
 *     "cyclotomic_order": 3,
 *     "hyperplanes": [ {"coeffs": [["1","0"], ["0","1"]], "constant": ["-1","0"]}, ... ],
 *     "name": "example"
 *   }
 *
 * Every field element is an array of phi(d) rational strings "p/q" giving
 * its coordinates in the basis 1, zeta_d, ..., zeta_d^(phi(d)-1).
 */
ArrangementFile parse_file(std::string_view text);

nlohmann::json cycnum_to_json(const CycNum& x);
nlohmann::json arrangement_to_json(const std::string& name, const Arrangement& a);

/// Canonical serialization (sorted keys, two-space indent, trailing newline).
std::string serialize(const std::string& name, const Arrangement& a);

} // namespace arrcover::cli
