// Copyright 2026 The loopmesh Authors
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

#ifndef LOOPMESH_CLI_H
#define LOOPMESH_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace loopmesh {

/// Entry point of the loopmesh tool. Returns the process exit code; on failure a single
/// "error: ..." line goes to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace loopmesh

#endif
