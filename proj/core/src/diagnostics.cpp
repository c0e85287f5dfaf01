// Copyright 2026 The SeqSeg Authors
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

#include "seqseg/diagnostics.hpp"

#include "seqseg/errors.hpp"

namespace seqseg {

std::optional<double> gelman_rubin(std::span<const ChainMoments> chains) {
  const std::size_t m = chains.size();
  if (m < 2) {
    throw InvalidArgument("gelman_rubin needs at least two chains");
  }
  const std::size_t n = chains.front().n;
  if (n < 2) {
    throw InvalidArgument("gelman_rubin needs at least two draws per chain");
  }
  double grand = 0.0;
  double w = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (chains[k].n != n) {
      throw InvalidArgument("gelman_rubin: chains differ in length");
    }
    // Incremental means keep B exactly zero when all chain means coincide.
    grand += (chains[k].mean - grand) / static_cast<double>(k + 1);
    w += (chains[k].variance() - w) / static_cast<double>(k + 1);
  }
  if (!(w > 0.0)) {
    return std::nullopt;
  }
  double spread = 0.0;
  for (const auto& c : chains) {
    spread += (c.mean - grand) * (c.mean - grand);
  }
  const double nf = static_cast<double>(n);
  const double mf = static_cast<double>(m);
  const double b = nf / (mf - 1.0) * spread;
  // V / W with V = (n-1)/n W + (M+1)/(M n) B, written so that B == 0 gives (n-1)/n exactly.
  return (nf - 1.0) / nf + (mf + 1.0) / (mf * nf) * (b / w);
}

std::optional<double> gelman_rubin(std::span<const std::vector<double>> chains) {
  std::vector<ChainMoments> moments(chains.size());
  for (std::size_t k = 0; k < chains.size(); ++k) {
    for (double x : chains[k]) {
      moments[k].push(x);
    }
  }
  return gelman_rubin(std::span<const ChainMoments>(moments));
}

}  // namespace seqseg
