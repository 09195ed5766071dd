/*
 * Copyright 2026 The nilspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace nilspec {

// Violated precondition on a mathematical object (non-square matrix,
// singular map, step too large, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or inconsistent user-supplied data (JSON files, unknown ids).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two quadratic-extension elements with different moduli were combined.
class ModulusMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// Something that must hold mathematically did not; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nilspec
