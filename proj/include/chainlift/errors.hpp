// Copyright 2026 The chainlift Authors
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

#ifndef CHAINLIFT_ERRORS_HPP
#define CHAINLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainlift {

/// Stable error codes; the CLI maps each to a machine-readable name.
enum class errc {
    not_prime,
    not_basic_irreducible,
    not_eisenstein,
    bad_t,
    invalid_spec,
    ring_mismatch,
    not_a_unit,
    wrong_length,
    non_monic_divisor,
    length_divisible_by_p,
    not_coprime,
    factorization_mismatch,
    empty_length,
    not_a_divisor,
    bad_precision,
    precision_exhausted,
    alpha_zero,
    not_totally_ramified,
    not_self_orthogonal,
    parse_error,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_basic_irreducible: return "NotBasicIrreducible";
        case errc::not_eisenstein: return "NotEisenstein";
        case errc::bad_t: return "BadT";
        case errc::invalid_spec: return "InvalidSpec";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_a_unit: return "NotAUnit";
        case errc::wrong_length: return "WrongLength";
        case errc::non_monic_divisor: return "NonMonicDivisor";
        case errc::length_divisible_by_p: return "LengthDivisibleByP";
        case errc::not_coprime: return "NotCoprime";
        case errc::factorization_mismatch: return "FactorizationMismatch";
        case errc::empty_length: return "EmptyLength";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::bad_precision: return "BadPrecision";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::alpha_zero: return "AlphaZero";
        case errc::not_totally_ramified: return "NotTotallyRamified";
        case errc::not_self_orthogonal: return "NotSelfOrthogonal";
        case errc::parse_error: return "ParseError";
        case errc::internal: return "Internal";
    }
    return "Internal";
}

}  // namespace chainlift

#endif
