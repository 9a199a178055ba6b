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

#ifndef SDGTAG_STEMMER_H_
#define SDGTAG_STEMMER_H_

#include <string>
#include <string_view>

namespace sdgtag {

// Snowball English ("Porter2") stemmer.
//
// The input is expected to be lowercase. Bytes outside a-z and the
// apostrophe are treated as consonants, so digit-bearing tokens such as
// "sdg3" come back unchanged.
std::string SnowballStem(std::string_view word);

}  // namespace sdgtag

#endif  // SDGTAG_STEMMER_H_
