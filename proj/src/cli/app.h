/*
 * Copyright 2026 The sdgtag Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDGTAG_CLI_APP_H_
#define SDGTAG_CLI_APP_H_

#include <ostream>

#include "config.h"

namespace sdgtag::cli {

// Parses `argv`, resolves the configuration and runs one command. Returns
// the process exit code; never throws.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const EnvLookup& getenv);

}  // namespace sdgtag::cli

#endif  // SDGTAG_CLI_APP_H_
