// Copyright 2026 The su2wigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SU2W_TOOLS_CLI_HPP
#define SU2W_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace su2w::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadArguments = 2,
    kIoError = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.12g") with a '.' decimal separator.
std::string format_value(double v);

/// Header shared by every CSV the tool writes.
inline constexpr const char* kCsvHeader = "theta,phi,nu,r,k,s,W";

}  // namespace su2w::cli

#endif  // SU2W_TOOLS_CLI_HPP
