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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "covchan/separability.hpp"
#include "covchan/states.hpp"

using namespace covchan;

namespace {

// Direct evaluation of the two-mode determinant criterion, kept independent
// of the separability module: det a + det b - 2 det c <= 4 det s + 1/4.
double det_form_margin(const CovarianceMatrix& cm) {
    const Eigen::Matrix2d a = cm.mat().block<2, 2>(0, 0);
    const Eigen::Matrix2d b = cm.mat().block<2, 2>(2, 2);
    const Eigen::Matrix2d c = cm.mat().block<2, 2>(0, 2);
    return a.determinant() + b.determinant() - 2.0 * c.determinant() -
           (4.0 * cm.mat().determinant() + 0.25);
}

}  // namespace

TEST_SUITE("tmss") {
    TEST_CASE("no squeezing gives the vacuum") {
        CHECK(tmss(0.0).mat() == (0.5 * Eigen::Matrix4d::Identity()));
    }

    TEST_CASE("matrix entries at r = 1") {
        const CovarianceMatrix cm = tmss(1.0);
        const double c = 0.5 * std::cosh(2.0);
        const double s = 0.5 * std::sinh(2.0);
        for (int i = 0; i < 4; ++i) {
            CHECK(cm.mat()(i, i) == doctest::Approx(c).epsilon(1e-15));
        }
        CHECK(cm.mat()(0, 2) == doctest::Approx(s).epsilon(1e-15));
        CHECK(cm.mat()(1, 3) == doctest::Approx(-s).epsilon(1e-15));
        CHECK(cm.mat()(0, 1) == 0.0);
        CHECK(cm.mat()(0, 3) == 0.0);
    }

    TEST_CASE("pure with determinant 1/16 for every squeeze") {
        for (double r : {0.1, 0.7, 1.5, 2.0}) {
            CHECK(is_pure(tmss(r)));
            CHECK(tmss(r).mat().determinant() == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
        }
    }

    TEST_CASE("rejects negative or non-finite squeeze") {
        CHECK_THROWS_AS(tmss(-0.1), Error);
        CHECK_THROWS_AS(tmss(std::nan("")), Error);
    }
}

TEST_SUITE("vacuum") {
    TEST_CASE("single mode") {
        CHECK(vacuum(1).mat() == (0.5 * Eigen::Matrix2d::Identity()));
    }

    TEST_CASE("direct sum structure") {
        CHECK(vacuum(3).mat() == (0.5 * Eigen::MatrixXd::Identity(6, 6)));
    }

    TEST_CASE("pure for all small mode counts") {
        for (int n = 1; n <= 5; ++n) CHECK(is_pure(vacuum(n)));
    }
}

TEST_SUITE("blocks") {
    TEST_CASE("tmss block structure") {
        const TwoModeBlocks b = blocks(tmss(0.8));
        const double c = 0.5 * std::cosh(1.6);
        const double s = 0.5 * std::sinh(1.6);
        CHECK(b.alpha(0, 0) == doctest::Approx(c).epsilon(1e-15));
        CHECK(b.alpha(0, 1) == 0.0);
        CHECK(b.alpha == b.beta);
        CHECK(b.gamma(0, 0) == doctest::Approx(s).epsilon(1e-15));
        CHECK(b.gamma(1, 1) == doctest::Approx(-s).epsilon(1e-15));
        CHECK(b.gamma(0, 1) == 0.0);
    }

    TEST_CASE("vacuum has no correlations") {
        const TwoModeBlocks b = blocks(vacuum(2));
        CHECK(b.gamma == Eigen::Matrix2d::Zero());
    }

    TEST_CASE("reassembly reproduces the source exactly") {
        Rng rng = make_rng(31);
        const PureStateSpec spec = draw_pure_state_spec(rng, 2, 0.3, 1.5);
        const CovarianceMatrix cm = random_pure_two_mode(spec);
        const TwoModeBlocks b = blocks(cm);
        Eigen::Matrix4d re;
        re.block<2, 2>(0, 0) = b.alpha;
        re.block<2, 2>(0, 2) = b.gamma;
        re.block<2, 2>(2, 0) = b.gamma.transpose();
        re.block<2, 2>(2, 2) = b.beta;
        CHECK(re == cm.mat());
    }

    TEST_CASE("wrong mode count") {
        CHECK_THROWS_AS(blocks(vacuum(3)), DimensionError);
    }
}

TEST_SUITE("is_pure") {
    TEST_CASE("squeezed states are pure, thermal states are not") {
        CHECK(is_pure(tmss(2.0)));
        CHECK_FALSE(is_pure(CovarianceMatrix(1, Eigen::Matrix2d::Identity())));
    }

    TEST_CASE("purity is symplectic-invariant") {
        Rng rng = make_rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            const CovarianceMatrix cm =
                transform(random_symplectic(2, rng()), tmss(1.2));
            CHECK(is_pure(cm));
        }
    }
}

TEST_SUITE("random pure two-mode states") {
    TEST_CASE("no squeezing gives a separable product state") {
        Rng rng = make_rng(5);
        PureStateSpec spec = draw_pure_state_spec(rng, 2, 0.0, 0.0);
        REQUIRE(spec.squeeze_r == 0.0);
        const SeparabilityVerdict v = two_mode_separable(random_pure_two_mode(spec));
        CHECK(v.separable);
        CHECK(std::abs(v.margin) <= 1e-9);  // products of pure factors sit on the bound
    }

    TEST_CASE("identity locals reproduce the squeezed state") {
        PureStateSpec spec;
        spec.n_modes = 2;
        spec.squeeze_r = 1.0;
        spec.local_ops = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
        CHECK((random_pure_two_mode(spec).mat() - tmss(1.0).mat())
                  .cwiseAbs()
                  .maxCoeff() <= 1e-15);
    }

    TEST_CASE("squeezed specs come out entangled") {
        Rng rng = make_rng(8);
        for (int trial = 0; trial < 50; ++trial) {
            PureStateSpec spec = draw_pure_state_spec(rng, 2, 0.8, 0.8);
            const CovarianceMatrix cm = random_pure_two_mode(spec);
            CHECK(det_form_margin(cm) > 0.0);
            CHECK_FALSE(two_mode_separable(cm).separable);
        }
    }

    TEST_CASE("draws are pure and entangled away from the vacuum") {
        Rng rng = make_rng(9);
        int checked_purity = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const PureStateSpec spec = draw_pure_state_spec(rng, 2, 0.06, 2.0);
            const CovarianceMatrix cm = random_pure_two_mode(spec);
            CHECK(det_form_margin(cm) > 0.0);
            if (trial % 10 == 0) {
                ++checked_purity;
                CHECK(is_pure(cm));
            }
        }
        CHECK(checked_purity == 1000);
    }
}

TEST_SUITE("random pure n-mode states") {
    TEST_CASE("no squeezing gives a state separable across the channel side") {
        Rng rng = make_rng(11);
        PureStateSpec spec = draw_pure_state_spec(rng, 3, 0.0, 0.0);
        const CovarianceMatrix cm = random_pure_n_mode(spec);
        CHECK(is_pure(cm));
        CHECK(ppt_separable(cm, 2).separable);
    }

    TEST_CASE("trivial mixers leave the direct sum in place") {
        PureStateSpec spec;
        spec.n_modes = 3;
        spec.squeeze_r = 1.0;
        Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(6, 6);
        expected.topLeftCorner(2, 2) = 0.5 * Eigen::Matrix2d::Identity();
        expected.bottomRightCorner(4, 4) = tmss(1.0).mat();
        CHECK((random_pure_n_mode(spec).mat() - expected).cwiseAbs().maxCoeff() <=
              1e-15);
    }

    TEST_CASE("squeezed four-mode states are entangled across the last mode") {
        Rng rng = make_rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            PureStateSpec spec = draw_pure_state_spec(rng, 4, 1.2, 1.2);
            const CovarianceMatrix cm = random_pure_n_mode(spec);
            const auto nus = symplectic_eigenvalues(partial_transpose(cm, 3));
            CHECK(nus.front() < 0.5 - 1e-3);
        }
    }

    TEST_CASE("draws are pure") {
        Rng rng = make_rng(14);
        for (int n : {3, 4, 5}) {
            for (int trial = 0; trial < 60; ++trial) {
                const PureStateSpec spec = draw_pure_state_spec(rng, n, 0.1, 2.0);
                CHECK(is_pure(random_pure_n_mode(spec), 1e-6));
            }
        }
    }

    TEST_CASE("needs at least three modes") {
        PureStateSpec spec;
        spec.n_modes = 2;
        CHECK_THROWS_AS(random_pure_n_mode(spec), DimensionError);
    }
}

TEST_SUITE("state spec sampling") {
    TEST_CASE("deterministic per seed") {
        Rng a = make_rng(100);
        Rng b = make_rng(100);
        const PureStateSpec sa = draw_pure_state_spec(a, 3, 0.1, 2.0);
        const PureStateSpec sb = draw_pure_state_spec(b, 3, 0.1, 2.0);
        CHECK(sa.squeeze_r == sb.squeeze_r);
        REQUIRE(sa.local_ops.size() == sb.local_ops.size());
        CHECK(sa.local_ops[0].theta == sb.local_ops[0].theta);
        CHECK(sa.mixer_seed == sb.mixer_seed);
    }

    TEST_CASE("respects the squeeze range") {
        Rng rng = make_rng(101);
        for (int trial = 0; trial < 500; ++trial) {
            const PureStateSpec spec = draw_pure_state_spec(rng, 2, 0.1, 2.0);
            CHECK(spec.squeeze_r >= 0.1);
            CHECK(spec.squeeze_r <= 2.0);
        }
    }
}
