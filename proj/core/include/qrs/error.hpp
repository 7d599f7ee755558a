// Copyright 2026 The qrsmux Authors
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

namespace qrs {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class field_mismatch_error : public error {
 public:
  using error::error;
};
class unsupported_field_error : public error {
 public:
  using error::error;
};
class range_error : public error {
 public:
  using error::error;
};
class invalid_dimension_error : public error {
 public:
  using error::error;
};
class invalid_gate_error : public error {
 public:
  using error::error;
};
class resolution_error : public error {
 public:
  using error::error;
};
class sealed_circuit_error : public error {
 public:
  using error::error;
};
class parse_error : public error {
 public:
  using error::error;
};
class lowering_error : public error {
 public:
  using error::error;
};
class unsupported_gate_error : public error {
 public:
  using error::error;
};
class resource_limit_error : public error {
 public:
  using error::error;
};
class unsupported_configuration_error : public error {
 public:
  using error::error;
};
class io_error : public error {
 public:
  using error::error;
};
class config_error : public error {
 public:
  using error::error;
};

}  // namespace qrs
