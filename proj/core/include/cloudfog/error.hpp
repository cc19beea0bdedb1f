// Copyright 2026 The cloudfog Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cloudfog {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, missing or mistyped field).
class ParseError : public Error {
 public:
    using Error::Error;
};

/// Well-formed input that violates a model invariant or an operation's
/// precondition (unknown node, disconnected graph, negative rate, ...).
class ValidationError : public Error {
 public:
    using Error::Error;
};

/// A placement that breaks assignment, capacity or locality constraints.
class ConstraintViolation : public ValidationError {
 public:
    using ValidationError::ValidationError;
};

/// No feasible placement exists for the scenario.
class InfeasibleError : public Error {
 public:
    using Error::Error;
};

/// Exhaustive enumeration refused because the instance is too large.
class InstanceTooLarge : public Error {
 public:
    using Error::Error;
};

}  // namespace cloudfog
