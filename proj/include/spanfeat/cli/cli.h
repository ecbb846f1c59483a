// Copyright 2026 The spanfeat Authors.
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

#ifndef SPANFEAT_CLI_CLI_H_
#define SPANFEAT_CLI_CLI_H_

#include <iostream>

namespace spanfeat {

// Entry point of the `spanfeat` tool. Commands: gen-data, train, eval,
// predict, ablate, grad-check. Returns the process exit code; failures are
// reported as a single line on `err`.
int RunCli(int argc, const char* const* argv, std::istream& in = std::cin,
           std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace spanfeat

#endif  // SPANFEAT_CLI_CLI_H_
