// Copyright 2026 The tfgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TFGRAPH_CLI_HPP
#define TFGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tfgraph {

// Command-line dispatch. `args` excludes the program name; `-` as a graph
// path reads from `in`. Returns 0 on success (negative answers included),
// 2 on input errors, 3 when a group enumeration cap is exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace tfgraph

#endif  // TFGRAPH_CLI_HPP
