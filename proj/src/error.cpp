// Copyright 2026 The fatalpoint Authors
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

#include "fatalpoint/error.hpp"

namespace fatalpoint {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Config: return "configuration error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::NoRecords: return "no usable records";
    case ErrorKind::EmptyInput: return "empty input";
    case ErrorKind::InfeasibleK: return "infeasible k";
    case ErrorKind::EmptyCluster: return "empty cluster";
    case ErrorKind::Alignment: return "alignment error";
    case ErrorKind::Invariant: return "invariant violation";
    case ErrorKind::UndefinedCorrelation: return "undefined correlation";
    case ErrorKind::Boundary: return "boundary error";
    case ErrorKind::OracleScope: return "oracle scope error";
  }
  return "unknown error";
}

}  // namespace fatalpoint
