#pragma once

#include <string>

#include "chermnykh/params.hpp"

namespace chermnykh {

/// Parse a flat key = value parameter file.
///
/// Recognised keys: mu, q1, a2, disk.a, disk.b, disk.h, disk.c, disk.mb, r_ref,
/// pi_mode (exact | paper), potential (consistent | printed). A [disk] section
/// header prefixes the keys that follow it. '#' starts a comment; string values
/// may be quoted. mu is required. When disk.b differs from disk.a exactly one
/// of disk.c and disk.mb must be present. Throws ModelError on any problem and
/// validates the result.
SystemParams parse_params(const std::string& text);

/// Read and parse a parameter file. Throws ModelError if it cannot be read.
SystemParams load_params(const std::string& path);

PiMode parse_pi_mode(const std::string& text);
PotentialForm parse_potential(const std::string& text);

}  // namespace chermnykh
