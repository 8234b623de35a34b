// Copyright 2026 The superpose Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace superpose {

/// Raised when an input violates a mathematical precondition (empty locus,
/// non-Hermitian matrix, invalid weights, ...). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
   public:
    explicit DomainError(const std::string &what) : std::runtime_error(what) {
    }
};

/// Raised on unreadable or malformed input files. The CLI maps it to exit code 2.
class IoError : public std::runtime_error {
   public:
    explicit IoError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace superpose
