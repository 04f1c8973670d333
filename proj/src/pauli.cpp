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

#include "honeycomb/pauli.hpp"

#include <stdexcept>

namespace honeycomb {

namespace {

// kProductPhase[a][b]: sigma_a * sigma_b = i^k sigma_{a^b}, indices use the
// Letter encoding (I=0, X=1, Z=2, Y=3).
constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},    // I
    {0, 0, -1, 1},   // X: XZ = -iY, XY = iZ
    {0, 1, 0, -1},   // Z: ZX = iY, ZY = -iX
    {0, -1, 1, 0},   // Y: YX = -iZ, YZ = iX
};

std::size_t word_count(std::size_t qubits) { return (qubits + 63) / 64; }

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'I': case 'i': case '_': return Letter::I;
    case 'X': case 'x': return Letter::X;
    case 'Y': case 'y': return Letter::Y;
    case 'Z': case 'z': return Letter::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
}

PauliOperator::PauliOperator(std::size_t qubits)
    : qubits_(qubits), xs_(word_count(qubits), 0), zs_(word_count(qubits), 0) {}

PauliOperator PauliOperator::single(std::size_t qubits, std::size_t q, Letter l) {
  if (q >= qubits) throw std::out_of_range("qubit index out of range");
  PauliOperator p(qubits);
  p.set_letter(q, l);
  return p;
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  int phase = 0;
  if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  PauliOperator p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p.set_letter(q, letter_from_char(text[q]));
  p.phase_ = phase;
  return p;
}

void PauliOperator::set_letter(std::size_t q, Letter l) {
  const std::uint64_t bit = std::uint64_t{1} << (q & 63);
  const auto v = static_cast<unsigned>(l);
  if (v & 1U) xs_[q >> 6] |= bit; else xs_[q >> 6] &= ~bit;
  if (v & 2U) zs_[q >> 6] |= bit; else zs_[q >> 6] &= ~bit;
}

void PauliOperator::multiply_letter(std::size_t q, Letter l) {
  const auto a = static_cast<unsigned>(letter(q));
  const auto b = static_cast<unsigned>(l);
  phase_ = (phase_ + kProductPhase[a][b] + 4) & 3;
  const std::uint64_t bit = std::uint64_t{1} << (q & 63);
  if (b & 1U) xs_[q >> 6] ^= bit;
  if (b & 2U) zs_[q >> 6] ^= bit;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
  if (rhs.qubits_ != qubits_) throw std::invalid_argument("Pauli size mismatch");
  int phase = phase_ + rhs.phase_;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    const std::uint64_t x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
    const std::uint64_t X1 = x1 & ~z1, Y1 = x1 & z1, Z1 = ~x1 & z1;
    const std::uint64_t X2 = x2 & ~z2, Y2 = x2 & z2, Z2 = ~x2 & z2;
    const std::uint64_t plus = (X1 & Y2) | (Y1 & Z2) | (Z1 & X2);
    const std::uint64_t minus = (X1 & Z2) | (Y1 & X2) | (Z1 & Y2);
    phase += std::popcount(plus) - std::popcount(minus);
    xs_[w] = x1 ^ x2;
    zs_[w] = z1 ^ z2;
  }
  phase_ = ((phase % 4) + 4) % 4;
  return *this;
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < xs_.size(); ++i) w += std::popcount(xs_[i] | zs_[i]);
  return w;
}

bool PauliOperator::is_identity_up_to_phase() const {
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (xs_[i] | zs_[i]) return false;
  return true;
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  for_each_support([&](std::size_t q, Letter) { out.push_back(q); });
  return out;
}

std::string PauliOperator::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  s.reserve(s.size() + qubits_);
  for (std::size_t q = 0; q < qubits_; ++q) s.push_back(letter_char(letter(q)));
  return s;
}

int symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  if (a.qubit_count() != b.qubit_count()) throw std::invalid_argument("Pauli size mismatch");
  const auto& ax = a.x_words();
  const auto& az = a.z_words();
  const auto& bx = b.x_words();
  const auto& bz = b.z_words();
  int acc = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) acc ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1;
  return acc;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) { return symplectic_product(a, b) == 0; }

}  // namespace honeycomb
