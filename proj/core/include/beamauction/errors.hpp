#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The beamauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace beamauction {

/// Scenario or experiment data that cannot be used (missing demand samples,
/// invalid bounds, non-contiguous ids).
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed solver input: non-finite or negative costs, bad padding constant,
/// out-of-range indices, invalid beam orders.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// The brute-force oracle was asked to enumerate an instance that is too large.
class OracleScopeError : public std::length_error
{
public:
  using std::length_error::length_error;
};

}  // namespace beamauction
