// Copyright 2026 The sparing Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sparing {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  EdgeNotFound,
  InvalidParam,
  UnknownPartition,
  MissingLabel,
  NotIndependent,
  TooLarge,
  CertificationFailed,
  DomainError,
  MissingGraph,
  UnknownClaim,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::UnknownPartition: return "UnknownPartition";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingGraph: return "MissingGraph";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sparing
