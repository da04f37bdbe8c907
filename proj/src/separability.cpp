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

#include "covchan/separability.hpp"

#include <algorithm>
#include <cmath>

#include "covchan/states.hpp"

namespace covchan {

const char* to_string(SeparabilityMethod method) {
    return method == SeparabilityMethod::DeterminantForm ? "DeterminantForm"
                                                         : "PPTForm";
}

SeparabilityVerdict two_mode_separable(const CovarianceMatrix& cm, double tol) {
    const TwoModeBlocks b = blocks(cm);
    const double lhs = b.alpha.determinant() + b.beta.determinant() -
                       2.0 * b.gamma.determinant();
    const double rhs = 4.0 * cm.mat().determinant() + 0.25;
    const double margin = lhs - rhs;
    return {margin <= tol, margin, SeparabilityMethod::DeterminantForm};
}

SeparabilityVerdict ppt_separable(const CovarianceMatrix& cm, int mode, double tol) {
    const auto nus = symplectic_eigenvalues(partial_transpose(cm, mode));
    const double nu_min = *std::min_element(nus.begin(), nus.end());
    const double margin = 0.5 - nu_min;
    return {margin <= tol, margin, SeparabilityMethod::PPTForm};
}

double log_negativity(const CovarianceMatrix& cm, int mode) {
    const auto nus = symplectic_eigenvalues(partial_transpose(cm, mode));
    const double nu_min = *std::min_element(nus.begin(), nus.end());
    return std::max(0.0, -std::log(2.0 * nu_min));
}

}  // namespace covchan
