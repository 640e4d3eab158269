#include <gtest/gtest.h>

#include <random>

#include "fardiff/error.hpp"
#include "fardiff/fuzzyart.hpp"
#include "oracles.hpp"

namespace fardiff {
namespace {

using Vec = std::vector<double>;

RowMatrix column(std::initializer_list<double> xs) {
    RowMatrix p(static_cast<Index>(xs.size()), 1);
    Index i = 0;
    for (double x : xs) p(i++, 0) = x;
    return p;
}

ArtParams params(double rho, double beta = 1.0) {
    ArtParams p;
    p.rho = rho;
    p.beta = beta;
    return p;
}

TEST(ComplementCode, Definition) {
    const Vec out = complement_code(Vec{0.2, 0.7});
    ASSERT_EQ(out.size(), 4u);
    EXPECT_DOUBLE_EQ(out[0], 0.2);
    EXPECT_DOUBLE_EQ(out[1], 0.7);
    EXPECT_DOUBLE_EQ(out[2], 0.8);
    EXPECT_DOUBLE_EQ(out[3], 0.3);
}

TEST(ComplementCode, ZeroVectorAndNorm) {
    EXPECT_EQ(complement_code(Vec{0, 0, 0}), (Vec{0, 0, 0, 1, 1, 1}));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int m = 1; m < 12; ++m) {
        Vec x(static_cast<std::size_t>(m));
        for (double& v : x) v = u(rng);
        EXPECT_NEAR(l1_norm(complement_code(x)), m, 1e-12);
    }
}

TEST(ComplementCode, RejectsOutOfRange) {
    EXPECT_THROW(complement_code(Vec{0.5, 1.2}), InputError);
    EXPECT_THROW(complement_code(Vec{-0.01}), InputError);
}

TEST(FuzzyAnd, ComponentwiseMinimum) {
    EXPECT_EQ(fuzzy_and(Vec{0.3, 0.8}, Vec{0.5, 0.2}), (Vec{0.3, 0.2}));
    const Vec y{0.1, 0.9, 0.4};
    EXPECT_EQ(fuzzy_and(y, y), y);
    EXPECT_EQ(fuzzy_and(y, Vec(3, 1.0)), y);
    EXPECT_THROW(fuzzy_and(Vec{1}, Vec{1, 2}), InputError);
}

TEST(Choice, SelfMatch) {
    const Vec x{0.2, 0.7, 0.8, 0.3};
    EXPECT_DOUBLE_EQ(choice(x, x, 0.01), 2.0 / 2.01);
}

TEST(Choice, UncommittedPrototype) {
    const Vec x = complement_code(Vec{0.1, 0.6, 0.3});
    EXPECT_DOUBLE_EQ(choice(x, Vec(6, 1.0), 0.001), 3.0 / (0.001 + 6.0));
}

TEST(Choice, HandEvaluation) {
    EXPECT_NEAR(choice(Vec{0.5, 0.5}, Vec{1, 0}, 0.001), 0.5 / 1.001, 1e-15);
    EXPECT_NEAR(choice(Vec{0.5, 0.5}, Vec{1, 0}, 0.001), 0.4995, 1e-4);
}

TEST(Vigilance, Cases) {
    const Vec x{0.5, 0.5};
    EXPECT_TRUE(vigilance_pass(x, Vec{0, 0}, 0.0));
    EXPECT_TRUE(vigilance_pass(x, x, 1.0));
    EXPECT_FALSE(vigilance_pass(x, Vec{1, 0}, 0.6));
    EXPECT_TRUE(vigilance_pass(x, Vec{1, 0}, 0.5));
    EXPECT_THROW(vigilance_pass(Vec{0, 0}, Vec{1, 1}, 0.5), InputError);
}

TEST(Learn, Endpoints) {
    const Vec w{0.8, 0.4}, x{0.5, 0.6};
    EXPECT_EQ(learn(w, x, 1.0), fuzzy_and(x, w));
    EXPECT_EQ(learn(w, x, 0.0), w);
}

TEST(Learn, HandEvaluation) {
    const Vec out = learn(Vec{0.8, 0.4}, Vec{0.5, 0.6}, 0.5);
    EXPECT_DOUBLE_EQ(out[0], 0.65);
    EXPECT_DOUBLE_EQ(out[1], 0.4);
    EXPECT_THROW(learn(Vec{1}, Vec{1}, 1.5), ParameterError);
}

TEST(WinnerTakeAll, LowestIndexOnTiesAndDisabledSkipped) {
    EXPECT_EQ(winner_take_all(Vec{0.2, 0.7, 0.7}, {false, false, false}), 1);
    EXPECT_EQ(winner_take_all(Vec{0.2, 0.7, 0.7}, {false, true, false}), 2);
    EXPECT_EQ(winner_take_all(Vec{0.2, 0.7}, {true, true}), -1);
}

TEST(WinnerTakeAll, InvariantUnderPositiveScaling) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        Vec scores(1 + trial % 9);
        std::vector<bool> disabled(scores.size());
        for (std::size_t j = 0; j < scores.size(); ++j) {
            scores[j] = u(rng);
            disabled[j] = u(rng) < 0.3;
        }
        Vec scaled = scores;
        const double c = 0.01 + 100 * u(rng);
        for (double& s : scaled) s *= c;
        EXPECT_EQ(winner_take_all(scores, disabled), winner_take_all(scaled, disabled));
    }
}

TEST(Train, ZeroVigilanceRepeatedPatternOneCategory) {
    const TrainResult r = train(column({0.3, 0.3, 0.3, 0.3}), params(0.0));
    EXPECT_EQ(r.assignment.n_categories, 1);
    EXPECT_TRUE(r.converged);
}

TEST(Train, FullVigilanceOneCategoryPerDistinctPattern) {
    RowMatrix x(6, 2);
    x << 0.1, 0.2, 0.5, 0.5, 0.1, 0.2, 0.9, 0.0, 0.5, 0.5, 0.0, 1.0;
    const TrainResult r = train(x, params(1.0));
    EXPECT_EQ(r.assignment.n_categories, 4);
    EXPECT_EQ(r.assignment.category[0], r.assignment.category[2]);
    EXPECT_EQ(r.assignment.category[1], r.assignment.category[4]);
}

TEST(Train, TwoSeparatedGroups) {
    const TrainResult r = train(column({0.0, 0.05, 0.9, 0.95}), params(0.8));
    EXPECT_EQ(r.assignment.n_categories, 2);
    EXPECT_EQ(r.assignment.category, (std::vector<int>{0, 0, 1, 1}));
    // Hand trace: prototypes are the fuzzy AND of each group's coded patterns.
    EXPECT_EQ(r.model.weights[0], (Vec{0.0, 0.95}));
    EXPECT_EQ(r.model.weights[1][0], 0.9);
    EXPECT_NEAR(r.model.weights[1][1], 0.05, 1e-15);
    EXPECT_EQ(r.epochs, 2);
}

TEST(Train, Errors) {
    EXPECT_THROW(train(RowMatrix(0, 2), ArtParams{}), InputError);
    EXPECT_THROW(train(column({0.5, 1.5}), ArtParams{}), InputError);
    EXPECT_THROW(train(column({0.5}), params(1.2)), ParameterError);
    ArtParams bad;
    bad.alpha = 0.0;
    EXPECT_THROW(train(column({0.5}), bad), ParameterError);
    ArtParams raw;
    raw.complement_coding = false;
    EXPECT_THROW(train(column({0.0, 0.5}), raw), InputError);
}

TEST(Train, WithoutComplementCoding) {
    ArtParams p = params(0.7);
    p.complement_coding = false;
    const TrainResult r = train(column({0.2, 0.25, 0.9}), p);
    EXPECT_EQ(r.model.coded_dim(), 1);
    EXPECT_GE(r.assignment.n_categories, 1);
    EXPECT_TRUE(r.converged);
}

TEST(Train, BetaZeroKeepsCommittedWeightsAtOnes) {
    std::mt19937_64 rng(3);
    const RowMatrix x = testing::random_unit_box(rng, 40, 3);
    const TrainResult r = train(x, params(0.9, 0.0));
    for (const auto& w : r.model.weights) EXPECT_EQ(w, Vec(6, 1.0));
}

TEST(TrainProperties, RandomCorpora) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = 1 + static_cast<Index>(u(rng) * 80);
        const Index m = 1 + trial % 4;
        const RowMatrix x = trial % 2 ? testing::random_unit_box(rng, n, m) : testing::random_lattice(rng, n, m, 4);
        const ArtParams p = params(u(rng));

        std::vector<Vec> previous;
        const TrainResult r = train(x, p, [&](const ArtModel& model, const Assignment& a, int) {
            // Monotone weights: existing prototypes only shrink.
            for (std::size_t j = 0; j < previous.size(); ++j)
                for (std::size_t c = 0; c < previous[j].size(); ++c) EXPECT_LE(model.weights[j][c], previous[j][c]);
            previous = model.weights;
            for (int c : a.category) EXPECT_LT(c, a.n_categories);
        });
        EXPECT_TRUE(r.converged) << "trial " << trial;
        EXPECT_GE(r.assignment.n_categories, 1);
        EXPECT_LE(static_cast<std::size_t>(r.assignment.n_categories), testing::count_distinct_rows(x));
        for (const auto& w : r.model.weights)
            for (double v : w) EXPECT_TRUE(v >= 0.0 && v <= 1.0);

        // Fast learning: every prototype is a fuzzy subset of its members.
        for (Index i = 0; i < n; ++i) {
            const Vec coded = complement_code(Vec(x.row(i).begin(), x.row(i).end()));
            const auto& w = r.model.weights[static_cast<std::size_t>(r.assignment.category[std::size_t(i)])];
            EXPECT_EQ(fuzzy_and(coded, w), w);
        }

        // Inference after convergence reproduces the training assignment.
        const ArtModel before = r.model;
        const Assignment again = predict(r.model, x);
        EXPECT_EQ(again.category, r.assignment.category);
        EXPECT_EQ(r.model, before);
    }
}

TEST(Predict, ZeroVigilanceNeverRejects) {
    std::mt19937_64 rng(5);
    const TrainResult r = train(testing::random_unit_box(rng, 20, 2), params(0.0));
    const Assignment a = predict(r.model, testing::random_unit_box(rng, 50, 2));
    for (int c : a.category) EXPECT_NE(c, kNoMatch);
}

TEST(Predict, NoMatchMarkerForNovelPattern) {
    const TrainResult r = train(column({0.0, 0.02}), params(0.9));
    const Assignment a = predict(r.model, column({0.01, 1.0}));
    EXPECT_EQ(a.category[0], 0);
    EXPECT_EQ(a.category[1], kNoMatch);
    EXPECT_EQ(a.n_categories, 1);
}

TEST(Predict, Errors) {
    EXPECT_THROW(predict(ArtModel{}, column({0.5})), InputError);
    const TrainResult r = train(column({0.5}), ArtParams{});
    EXPECT_THROW(predict(r.model, RowMatrix::Constant(1, 2, 0.5)), InputError);
}

}  // namespace
}  // namespace fardiff
