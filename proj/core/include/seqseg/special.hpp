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

#pragma once

namespace seqseg {

/// Natural log of the gamma function for x > 0 (NaN otherwise).
///
/// Shifts small arguments up to x >= 10 with the recurrence and applies the
/// Stirling series there; absolute error stays below 1e-13 on (0, 1e8].
/// Reentrant, unlike std::lgamma which writes the global `signgam`.
double log_gamma(double x) noexcept;

}  // namespace seqseg
