/*
   Copyright 2026 The ratmap Authors

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

#ifndef RATMAP_ERROR_HPP
#define RATMAP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratmap {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or use different variables).
class RingMismatch : public Error {
   public:
    using Error::Error;
};

/// A division that was required to be exact left a remainder.
class InexactDivision : public Error {
   public:
    using Error::Error;
};

/// Precondition violated by an argument (bad padding, unknown variable, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Exponential-time routine refused an input above its size cap.
class SizeCapExceeded : public Error {
   public:
    using Error::Error;
};

/// Random sampler gave up after its attempt budget.
class SamplingBudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// Malformed JSON document or a document that violates a schema.
class SchemaError : public Error {
   public:
    using Error::Error;
};

/// Syntax error in the expression grammar. `position` is a 0-based byte offset.
class ParseError : public Error {
   public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position), message_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& bare_message() const noexcept { return message_; }

   private:
    std::size_t position_;
    std::string message_;
};

}  // namespace ratmap

#endif
