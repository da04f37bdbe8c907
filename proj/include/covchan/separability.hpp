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

#include "covchan/symplectic.hpp"

namespace covchan {

enum class SeparabilityMethod { DeterminantForm, PPTForm };

const char* to_string(SeparabilityMethod method);

/// Separability decision with the signed distance of the deciding
/// inequality; margin <= 0 separable, > 0 entangled (up to tol).
struct SeparabilityVerdict {
    bool separable;
    double margin;
    SeparabilityMethod method;
};

/// Two-mode determinant criterion:
/// det alpha + det beta - 2 det gamma <= 4 det sigma + 1/4,
/// margin = LHS - RHS. Exact for physical two-mode states.
SeparabilityVerdict two_mode_separable(const CovarianceMatrix& cm, double tol = 1e-9);

/// PPT across {mode} | rest: separable iff the smallest symplectic
/// eigenvalue of the partial transpose is >= 1/2; margin = 1/2 - nu_min.
/// Exact for 1 x (N-1) bipartitions of Gaussian states.
SeparabilityVerdict ppt_separable(const CovarianceMatrix& cm, int mode,
                                  double tol = 1e-9);

/// max(0, -ln(2 nu_min)) with nu_min the smallest symplectic eigenvalue of
/// the partial transpose across {mode} | rest.
double log_negativity(const CovarianceMatrix& cm, int mode);

}  // namespace covchan
