/*
  Copyright (c) 2026 the parkfn authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace parkfn {

// Enumeration size guard: thrown when a request exceeds the configured cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by psi() when applied to a strip with no moveable cell.
class FixedPointError : public std::domain_error {
 public:
  explicit FixedPointError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace parkfn
