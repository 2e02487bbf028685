// Copyright 2026 The onbase Authors.
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

#include "onbase/error.h"

namespace onbase {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kInvalidAllocation: return "invalid-allocation";
    case ErrorCode::kUnsupportedShape: return "unsupported-shape";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kContractViolation: return "contract-violation";
    case ErrorCode::kParam: return "param";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace onbase
