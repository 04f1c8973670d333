// Copyright 2026 The honeycomb-qec Authors
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

#ifndef HONEYCOMB_PAULI_HPP
#define HONEYCOMB_PAULI_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace honeycomb {

// Single-qubit letters. The numeric values double as (x, z) bit pairs:
// bit 0 is the X component and bit 1 the Z component.
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

// Multi-qubit Pauli operator i^phase * (tensor of sigma(x_j, z_j)) where
// sigma(1,1) = Y, so every letter is Hermitian and the phase is explicit.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t qubits);

  static PauliOperator single(std::size_t qubits, std::size_t q, Letter l);
  // Accepts an optional sign prefix: "+", "-", "i", "-i".
  static PauliOperator from_string(std::string_view text);

  std::size_t qubit_count() const { return qubits_; }
  int phase() const { return phase_; }
  void set_phase(int p) { phase_ = ((p % 4) + 4) % 4; }

  bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1U; }
  bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1U; }
  Letter letter(std::size_t q) const {
    return static_cast<Letter>(static_cast<unsigned>(x(q)) |
                               (static_cast<unsigned>(z(q)) << 1));
  }
  // Overwrites the letter on q without touching the phase.
  void set_letter(std::size_t q, Letter l);

  // Right-multiplies by a single-qubit letter on q (phase tracked).
  void multiply_letter(std::size_t q, Letter l);

  PauliOperator& operator*=(const PauliOperator& rhs);
  friend PauliOperator operator*(PauliOperator lhs, const PauliOperator& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const PauliOperator& other) const = default;
  bool equal_up_to_phase(const PauliOperator& other) const {
    return qubits_ == other.qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
  }

  std::size_t weight() const;
  bool is_identity_up_to_phase() const;
  std::vector<std::size_t> support() const;

  template <class F>
  void for_each_support(F&& f) const {
    for (std::size_t w = 0; w < xs_.size(); ++w) {
      std::uint64_t m = xs_[w] | zs_[w];
      while (m) {
        const int b = std::countr_zero(m);
        m &= m - 1;
        const std::size_t q = (w << 6) + static_cast<std::size_t>(b);
        f(q, letter(q));
      }
    }
  }

  const std::vector<std::uint64_t>& x_words() const { return xs_; }
  const std::vector<std::uint64_t>& z_words() const { return zs_; }

  std::string to_string() const;

 private:
  std::size_t qubits_ = 0;
  int phase_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

// Symplectic inner product (0 or 1). Throws std::invalid_argument on size
// mismatch.
int symplectic_product(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);

}  // namespace honeycomb

#endif  // HONEYCOMB_PAULI_HPP
