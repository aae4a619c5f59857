// Copyright 2026 The su2wigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SU2W_ERRORS_HPP
#define SU2W_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace su2w {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes or subsystem layouts that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Angular-momentum labels violating |m| <= j or half-integrality.
class InvalidQuantumNumbers : public Error {
public:
    using Error::Error;
};

/// Requested spherical-harmonic / tensor-operator rank is not implemented.
class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

class MixingOutOfRange : public Error {
public:
    using Error::Error;
};

class ROutOfRange : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Raised when Tr[rho R] carries an imaginary part above tolerance.
class NonRealResult : public Error {
public:
    using Error::Error;
};

}  // namespace su2w

#endif  // SU2W_ERRORS_HPP
