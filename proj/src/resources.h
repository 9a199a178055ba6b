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

#ifndef SDGTAG_SRC_RESOURCES_H_
#define SDGTAG_SRC_RESOURCES_H_

#include <string_view>

// Contents of the files under data/, compiled into the library.
namespace sdgtag::internal {

std::string_view BundledStopWords();
std::string_view BundledLemmaExceptions();
std::string_view BundledSdgDefinitions();

}  // namespace sdgtag::internal

#endif  // SDGTAG_SRC_RESOURCES_H_
