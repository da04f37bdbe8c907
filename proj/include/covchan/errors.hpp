// Copyright 2026 The covchan Authors.
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

namespace covchan {

/// Base class of all covchan errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix dimensions incompatible with the requested operation
/// (includes wrong mode counts).
struct DimensionError : Error {
    using Error::Error;
};

/// Mode index outside [0, n_modes).
struct ModeIndexError : Error {
    using Error::Error;
};

/// An (f, g) pair that does not describe a completely positive
/// Gaussian channel.
struct NotAChannelError : Error {
    using Error::Error;
};

/// Noise matrix g is not symmetric.
struct AsymmetricNoiseError : Error {
    using Error::Error;
};

/// Eigenvalue computation failed or produced an unpairable spectrum,
/// which signals ill-conditioned input.
struct EigensolverError : Error {
    using Error::Error;
};

/// Malformed or convention-mismatched state/channel/report document.
struct FileFormatError : Error {
    using Error::Error;
};

}  // namespace covchan
