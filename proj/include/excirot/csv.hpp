// Copyright 2026 the excirot authors
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

#pragma once

#include <string>

namespace excirot {

// 12 significant digits, locale-independent; NaN renders as "nan".
std::string format_g12(double v);

// Writes bytes verbatim (binary mode, LF line endings on every platform).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace excirot
