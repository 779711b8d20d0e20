/*
   Copyright 2026 The modinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MODINV_CLI_HPP
#define MODINV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace modinv::cli {

/// Exit statuses of the command line tool.
enum ExitCode : int {
    kOk = 0,
    kInvalidConfig = 1,
    kWitnesses = 2,  // nonseparation (strict), or a failed invariance/lifting check
    kBudgetExceeded = 3,
};

/// Runs `modinv <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modinv::cli

#endif  // MODINV_CLI_HPP
