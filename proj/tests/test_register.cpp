// Copyright 2026 The labelsim Authors
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

#include <gtest/gtest.h>

#include <random>

#include "labelsim/errors.hpp"
#include "labelsim/register.hpp"

using namespace labelsim;

namespace {

RegisterPtr small() {
    return new_register({{"a", {"0", "1", "2"}}, {"b", {"x", "y"}}});
}

} // namespace

TEST(Register, RejectsMalformedSpecs) {
    EXPECT_THROW(new_register({}), RegisterError);
    EXPECT_THROW(new_register({SubsystemSpec{"a", {"0"}}}), RegisterError);
    EXPECT_THROW(new_register({SubsystemSpec{"a", {"0", "0"}}}), RegisterError);
    EXPECT_THROW(new_register({{"a", {"0", "1"}}, {"a", {"0", "1"}}}), RegisterError);
}

TEST(Register, MixedRadixFirstSubsystemSlowest) {
    const auto reg = small();
    EXPECT_EQ(reg->dimension(), 6u);
    EXPECT_EQ(reg->encode({{"a", "0"}, {"b", "y"}}), 1u);
    EXPECT_EQ(reg->encode({{"a", "1"}, {"b", "x"}}), 2u);
    EXPECT_EQ(reg->encode({{"a", "2"}, {"b", "y"}}), 5u);
}

TEST(Register, EncodeDecodeRoundTrip) {
    const auto reg = new_register(
        {{"p", {"a", "b", "c"}}, {"q", {"u", "v"}}, {"r", {"0", "1", "2", "3", "4"}}});
    for (std::uint64_t j = 0; j < reg->dimension(); ++j) {
        EXPECT_EQ(reg->encode(reg->decode(j)), j);
    }
}

TEST(Register, UnknownNamesAndLabels) {
    const auto reg = small();
    EXPECT_THROW(static_cast<void>(reg->index_of("zz")), LabelError);
    EXPECT_THROW(static_cast<void>(reg->label_index(0, "9")), LabelError);
    EXPECT_THROW(static_cast<void>(reg->encode({{"a", "0"}})), LabelError);
}

TEST(StateVector, SuperposeNormalizesAndSumsDuplicates) {
    const auto reg = small();
    const auto s = superpose(reg,
                             {{1.0, {{"a", "0"}, {"b", "x"}}},
                              {1.0, {{"a", "0"}, {"b", "x"}}},
                              {2.0, {{"a", "1"}, {"b", "y"}}}},
                             true);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(amplitude(s, {{"a", "0"}, {"b", "x"}})), 1.0 / std::sqrt(2.0),
                1e-12);
}

TEST(StateVector, UnnormalizedTermsRejectedWithoutNormalize) {
    const auto reg = small();
    EXPECT_THROW(superpose(reg, {{2.0, {{"a", "0"}, {"b", "x"}}}}, false), Error);
}

TEST(StateVector, FidelityIgnoresGlobalPhase) {
    const auto reg = small();
    const auto a = superpose(reg, {{0.6, {{"a", "0"}, {"b", "x"}}}, {0.8, {{"a", "2"}, {"b", "y"}}}},
                             false);
    const Complex ph = std::polar(1.0, 0.7);
    const auto b = superpose(reg,
                             {{0.6 * ph, {{"a", "0"}, {"b", "x"}}},
                              {0.8 * ph, {{"a", "2"}, {"b", "y"}}}},
                             false);
    EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
}

TEST(StateVector, TensorAndDropDefinite) {
    const auto ra = new_register({{"a", {"0", "1"}}});
    const auto rb = new_register({{"b", {"x", "y"}}});
    const auto a = superpose(ra, {{1.0, {{"a", "0"}}}, {1.0, {{"a", "1"}}}}, true);
    const auto b = basis_state(rb, {{"b", "y"}});
    const auto ab = tensor(a, b);
    EXPECT_EQ(ab.reg().size(), 2u);
    EXPECT_NEAR(ab.norm_squared(), 1.0, 1e-12);
    const auto back = drop_definite(ab, {"b"});
    EXPECT_NEAR(fidelity(back, a), 1.0, 1e-12);
    EXPECT_THROW(drop_definite(ab, {"a"}), OperationError);
}

TEST(StateVector, RandomInnerProductsMatchDense) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n(0.0, 1.0);
    const auto reg = new_register({{"a", {"0", "1", "2"}}, {"b", {"0", "1", "2", "3"}}});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Term> ta;
        std::vector<Term> tb;
        for (std::uint64_t j = 0; j < reg->dimension(); ++j) {
            ta.push_back({{n(rng), n(rng)}, reg->decode(j)});
            tb.push_back({{n(rng), n(rng)}, reg->decode(j)});
        }
        const auto a = superpose(reg, ta, true);
        const auto b = superpose(reg, tb, true);
        const auto da = a.dense();
        const auto db = b.dense();
        Complex ref = 0.0;
        for (std::size_t i = 0; i < da.size(); ++i) {
            ref += std::conj(da[i]) * db[i];
        }
        EXPECT_NEAR(std::abs(inner_product(a, b) - ref), 0.0, 1e-12);
    }
}
