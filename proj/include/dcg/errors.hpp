// Copyright 2026 The Authors.
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

namespace dcg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DCG_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

// ground
DCG_DEFINE_ERROR(MassOverflow);
DCG_DEFINE_ERROR(MassNotOne);
DCG_DEFINE_ERROR(InvalidPartition);
// oracle
DCG_DEFINE_ERROR(UnknownPolicy);
DCG_DEFINE_ERROR(GroundSetTooLarge);
// network
DCG_DEFINE_ERROR(UnknownAgent);
DCG_DEFINE_ERROR(Disconnected);
DCG_DEFINE_ERROR(InvalidGraph);
// algorithms
DCG_DEFINE_ERROR(SearchSpaceTooLarge);
DCG_DEFINE_ERROR(InfeasibleOutput);
DCG_DEFINE_ERROR(InvalidConfig);
// scenario / experiment files
DCG_DEFINE_ERROR(ConfigError);

#undef DCG_DEFINE_ERROR

}  // namespace dcg
