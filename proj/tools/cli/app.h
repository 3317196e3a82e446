// Copyright 2026 The greenbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENBP_TOOLS_CLI_APP_H_
#define GREENBP_TOOLS_CLI_APP_H_

#include <ostream>
#include <string>
#include <vector>

namespace greenbp::cli {

// Entry point of the greenbp command line; returns the process exit code.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace greenbp::cli

#endif  // GREENBP_TOOLS_CLI_APP_H_
