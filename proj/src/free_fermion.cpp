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

#include "honeycomb/free_fermion.hpp"

#include <sstream>
#include <stdexcept>

namespace honeycomb {

void Couplings::require_gapped() const {
  std::ostringstream msg;
  msg << "couplings (" << jx << ", " << jy << ", " << jz << ") outside the gapped phase: ";
  if (!(jy > 0)) {
    msg << "jy > 0 fails";
  } else if (!(jx >= jy)) {
    msg << "jx >= jy fails";
  } else if (!(jz > jx)) {
    msg << "jz > jx fails";
  } else if (!(jz > jx + jy)) {
    msg << "jz > jx + jy fails";
  } else {
    return;
  }
  throw std::domain_error(msg.str());
}

std::string to_string(SectorLabel l) {
  return std::string(l.lx > 0 ? "+" : "-") + (l.ly > 0 ? "+" : "-");
}

SplittingReport splitting_report(const Couplings& c, int n) {
  SplittingReport r;
  r.value_double = splitting<double>(c, n);
  r.value = static_cast<double>(splitting<HighPrecision>(c, n));
  r.saturated = !(std::abs(r.value_double - r.value) <= 1e-2 * r.value);
  return r;
}

}  // namespace honeycomb
