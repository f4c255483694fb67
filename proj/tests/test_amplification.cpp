// Copyright 2026 The qprep Authors
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

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace qprep;
using Catch::Matchers::WithinAbs;

namespace {

const AmplitudeSpec &demo_spec() {
    static const AmplitudeSpec spec({0.25, 0.5}, 2);
    return spec;
}

double pipeline_success(const PipelineConfig &config) {
    const Circuit pipeline = build_pipeline(config);
    const StateVector state = apply(pipeline, StateVector::zero(pipeline.qubits()));
    return postselect(state, success_constraints(pipeline.layout())).probability;
}

} // namespace

TEST_CASE("good-state reflection flips exactly the marked subspace", "[amplification]") {
    const RegisterLayout layout{.address = 1, .data = 2, .control = 1, .flag = 1};
    const Circuit reflection = build_good_reflection(layout);
    const UnitaryMatrix u = full_unitary(reflection);
    const std::size_t dim = u.size();
    for (std::size_t col = 0; col < dim; ++col) {
        const bool marked = ((col >> 1) & 1) == 0 && (col & 1) == 1; // control 0, flag 1
        for (std::size_t row = 0; row < dim; ++row) {
            const double expected = (row == col) ? (marked ? -1.0 : 1.0) : 0.0;
            REQUIRE(std::abs(u[col][row] - expected) < 1e-12);
        }
    }
}

TEST_CASE("reflections are involutions", "[amplification]") {
    const RegisterLayout layout{.address = 1, .data = 2, .control = 1, .flag = 1};
    Circuit twice = build_good_reflection(layout);
    twice.append(build_good_reflection(layout));
    const Circuit prep = build_state_prep(demo_spec(), Algorithm::standard, false, layout);
    Circuit diffusion_twice = build_initial_reflection(prep);
    diffusion_twice.append(build_initial_reflection(prep));
    for (const Circuit &circuit : {twice, diffusion_twice}) {
        const UnitaryMatrix u = full_unitary(circuit);
        for (std::size_t col = 0; col < u.size(); ++col) {
            for (std::size_t row = 0; row < u.size(); ++row) {
                REQUIRE(std::abs(u[col][row] - ((row == col) ? 1.0 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("initial-state reflection fixes the prepared state", "[amplification]") {
    const RegisterLayout layout = standard_layout(demo_spec(), false);
    const Circuit prep = build_state_prep(demo_spec(), Algorithm::standard, false, layout);
    const Circuit reflection = build_initial_reflection(prep);

    const StateVector prepared = apply(prep, StateVector::zero(layout.total()));
    const StateVector reflected = apply(reflection, prepared);
    REQUIRE_THAT(fidelity(reflected, prepared), WithinAbs(1.0, 1e-12));

    // A state orthogonal to the prepared one is negated relative to it: the
    // reflection acts as identity minus twice the projector.
    StateVector mixed = prepared;
    StateVector orthogonal = StateVector::zero(layout.total());
    // Gram-Schmidt a basis state against the prepared state.
    const Amplitude overlap = std::conj(prepared[3]);
    for (std::size_t i = 0; i < mixed.dimension(); ++i) {
        orthogonal[i] = -overlap * prepared[i];
    }
    orthogonal[3] += 1.0;
    const double onorm = orthogonal.norm();
    for (std::size_t i = 0; i < orthogonal.dimension(); ++i) {
        orthogonal[i] /= onorm;
    }
    const StateVector reflected_orth = apply(reflection, orthogonal);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < orthogonal.dimension(); ++i) {
        max_dev = std::max(max_dev, std::abs(reflected_orth[i] + orthogonal[i]));
    }
    REQUIRE(max_dev < 1e-12); // negated, consistent with the fixed prepared state
}

TEST_CASE("one iteration lifts the demo success probability", "[amplification]") {
    PipelineConfig config{demo_spec(), Algorithm::standard, 1, false, 0};
    REQUIRE_THAT(pipeline_success(config), WithinAbs(0.9910836762688614, 1e-9));
}

TEST_CASE("round scheduling", "[amplification]") {
    REQUIRE(optimal_rounds(1.0) == 0);
    REQUIRE(optimal_rounds(5.0 / 18.0) == 1);
    REQUIRE(optimal_rounds(0.15625) == 1);
    REQUIRE_THROWS_AS(optimal_rounds(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(optimal_rounds(-0.5), std::invalid_argument);

    // The scheduled round count never loses probability.
    for (double p0 : {0.9, 0.5, 0.3, 0.1, 0.03, 0.011, 0.004}) {
        REQUIRE(amplified_probability(p0, optimal_rounds(p0)) >= p0);
    }
}

TEST_CASE("pipeline success probabilities", "[amplification]") {
    SECTION("standard demo, one round") {
        PipelineConfig config{demo_spec(), Algorithm::standard, 1, false, 0};
        REQUIRE_THAT(pipeline_success(config), WithinAbs(0.9911, 5e-4));
    }
    SECTION("modified demo, one round") {
        PipelineConfig config{demo_spec(), Algorithm::modified, 1, false, 0};
        REQUIRE_THAT(pipeline_success(config), WithinAbs(0.88134765625, 1e-9));
    }
    SECTION("zero rounds leaves the bare probabilities") {
        PipelineConfig std_config{demo_spec(), Algorithm::standard, 0, false, 0};
        REQUIRE_THAT(pipeline_success(std_config), WithinAbs(5.0 / 18.0, 1e-12));
        PipelineConfig mod_config{demo_spec(), Algorithm::modified, 0, false, 0};
        REQUIRE_THAT(pipeline_success(mod_config), WithinAbs(0.15625, 1e-12));
    }
    SECTION("auto rounds picks one round for the demo") {
        PipelineConfig config{demo_spec(), Algorithm::standard, std::nullopt, false, 0};
        REQUIRE(resolved_rounds(config) == 1);
    }
}

TEST_CASE("success probability follows the amplification law", "[amplification]") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 3; ++trial) {
        const AmplitudeSpec spec = qprep_test::random_spec(4, 3, rng);
        for (Algorithm algorithm : {Algorithm::standard, Algorithm::modified}) {
            const double p0 = analytic_success_probability(spec, algorithm);
            for (std::size_t r : {0, 1, 2}) {
                PipelineConfig config{spec, algorithm, r, false, 0};
                REQUIRE_THAT(pipeline_success(config),
                             WithinAbs(amplified_probability(p0, r), 1e-9));
            }
        }
    }
}

TEST_CASE("post-selected target is independent of the round count", "[amplification]") {
    const RegisterLayout layout = standard_layout(demo_spec(), false);
    std::vector<StateVector> collapsed;
    for (std::size_t r : {0, 1, 2}) {
        PipelineConfig config{demo_spec(), Algorithm::standard, r, false, 0};
        const Circuit pipeline = build_pipeline(config);
        const StateVector state = apply(pipeline, StateVector::zero(pipeline.qubits()));
        const PostSelection sel = postselect(state, success_constraints(layout));
        REQUIRE(sel.collapsed);
        collapsed.push_back(*sel.collapsed);
    }
    REQUIRE_THAT(fidelity(collapsed[0], collapsed[1]), WithinAbs(1.0, 1e-10));
    REQUIRE_THAT(fidelity(collapsed[0], collapsed[2]), WithinAbs(1.0, 1e-10));
}

TEST_CASE("final oracle call resets the data register", "[amplification]") {
    std::mt19937_64 rng(505);
    const AmplitudeSpec spec = qprep_test::random_spec(4, 3, rng);
    for (Algorithm algorithm : {Algorithm::standard, Algorithm::modified}) {
        PipelineConfig config{spec, algorithm, std::nullopt, false, 0};
        const Circuit pipeline = build_pipeline(config);
        const RegisterLayout &layout = pipeline.layout();
        const StateVector state = apply(pipeline, StateVector::zero(pipeline.qubits()));
        const PostSelection sel = postselect(state, success_constraints(layout));
        REQUIRE(sel.collapsed);
        double data_population = 0.0;
        for (std::size_t i = 0; i < sel.collapsed->dimension(); ++i) {
            for (std::size_t b = 0; b < layout.data; ++b) {
                if (i & sel.collapsed->mask(layout.data_qubit(b))) {
                    data_population += std::norm((*sel.collapsed)[i]);
                    break;
                }
            }
        }
        REQUIRE(data_population < 1e-12);
    }
}

TEST_CASE("sampling", "[amplification]") {
    PipelineConfig config{demo_spec(), Algorithm::standard, 1, false, 0};
    const Circuit pipeline = build_pipeline(config);

    SECTION("fixed seed reproduces the histogram") {
        const SampleResult a = sample(pipeline, 1000, 42);
        const SampleResult b = sample(pipeline, 1000, 42);
        REQUIRE(a.counts == b.counts);
        REQUIRE(a.success_fraction == b.success_fraction);
    }
    SECTION("single shot gives a single outcome") {
        const SampleResult result = sample(pipeline, 1, 9);
        REQUIRE(result.counts.size() == 1);
        REQUIRE(result.counts.begin()->second == 1);
    }
    SECTION("empirical frequency sits near the simulated probability") {
        const double p = pipeline_success(config);
        const double sigma = std::sqrt(p * (1.0 - p) / 8192.0);
        const SampleResult result = sample(pipeline, 8192, 1);
        REQUIRE(std::abs(result.success_fraction - p) < 3.0 * sigma);
    }
    SECTION("zero shots rejected") {
        REQUIRE_THROWS_AS(sample(pipeline, 0, 1), std::invalid_argument);
    }
}
