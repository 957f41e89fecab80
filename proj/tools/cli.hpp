#pragma once

// Command-line front end for the hquat library.
//
//   count <n> [--restriction none|i|ii|iii] [--oracle]
//   factor <quat>
//   gcd --side left|right <quat> <quat>
//   tau -m <odd m> <quat>
//   primary <quat> [--side left|right]
//   primes -p <p>
//   verify --max-n <N>
//
// A global --json switches every verb to machine-readable output.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hquat/prime_factor.hpp"
#include "hquat/quat.hpp"

namespace hquat::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidArguments = 1,
    kVerificationMismatch = 2,
    kInternalError = 3,
};

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const OrderElement& e);
OrderElement quat_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Factorization& f);

}  // namespace hquat::cli
