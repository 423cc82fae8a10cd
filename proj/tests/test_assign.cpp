#include "corrseg/assign.hpp"

#include <random>

#include "corrseg/correlate.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace corrseg;
using corrseg::testing::random_trajectory;

namespace {

QMatrix from_columns(const std::vector<std::vector<double>>& columns) {
    QMatrix q(columns.front().size(), columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t k = 0; k < columns[i].size(); ++k) {
            q.at(k, i) = columns[i][k];
        }
    }
    return q;
}

}  // namespace

TEST_SUITE("assign") {

TEST_CASE("predicted start takes the first argmax") {
    CHECK(predicted_start(SimilarityProfile(0, {-2.0, 0.0, -2.0})) == 1);
    CHECK(predicted_start(SimilarityProfile(0, {5.0})) == 0);
    CHECK(predicted_start(SimilarityProfile(0, {3.0, 7.0, 7.0, 1.0})) == 1);
}

TEST_CASE("dense assignment is the row-wise argmax") {
    CHECK(assign_dense(from_columns({{1.0, 2.0, 3.0}})).classes() ==
          std::vector<int>{0, 0, 0});
    CHECK(assign_dense(from_columns({{0.0, -5.0}, {-5.0, 0.0}})).classes() ==
          std::vector<int>{0, 1});
    CHECK(assign_dense(from_columns({{-1.0, -1.0}, {-1.0, -1.0}})).classes() ==
          std::vector<int>{0, 0});  // tie -> lowest class

    QMatrix with_sentinel(2, 2);
    with_sentinel.at(0, 0) = 1.0;
    CHECK_THROWS_AS(assign_dense(with_sentinel), std::invalid_argument);
}

TEST_CASE("dense assignment never produces gaps") {
    std::mt19937_64 engine(3);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t rows = 2 + engine() % 30;
        const std::size_t cols = 1 + engine() % 5;
        QMatrix q(rows, cols);
        for (std::size_t k = 0; k < rows; ++k) {
            for (std::size_t i = 0; i < cols; ++i) {
                q.at(k, i) = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
            }
        }
        const Labeling z = assign_dense(q);
        for (int c : z.classes()) {
            CHECK(c >= 0);
        }
    }
}

TEST_CASE("dense argmax is invariant under positive scaling and shifts") {
    std::mt19937_64 engine(5);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t rows = 2 + engine() % 20;
        const std::size_t cols = 2 + engine() % 4;
        QMatrix q(rows, cols);
        QMatrix transformed(rows, cols);
        const double scale = 0.5 + static_cast<double>(engine() % 100) / 25.0;
        const double shift = static_cast<double>(engine() % 200) - 100.0;
        for (std::size_t k = 0; k < rows; ++k) {
            for (std::size_t i = 0; i < cols; ++i) {
                const double v = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
                q.at(k, i) = v;
                transformed.at(k, i) = scale * v + shift;
            }
        }
        CHECK(assign_dense(q) == assign_dense(transformed));
    }
}

TEST_CASE("greedy gaps: traced example") {
    const Labeling z = assign_greedy_gaps(from_columns({{-2.0, 0.0, 0.0, -2.0}}), {2});
    CHECK(z.classes() == std::vector<int>{-1, 0, 0, -1});
}

TEST_CASE("greedy gaps: single window spanning everything") {
    const Labeling z = assign_greedy_gaps(from_columns({{4.0, 4.0, 4.0}}), {3});
    CHECK(z.classes() == std::vector<int>{0, 0, 0});
}

TEST_CASE("greedy gaps: two exact slices under sse") {
    // Full task embeds both demonstrations at known offsets.
    std::mt19937_64 engine(11);
    const Trajectory a = random_trajectory(engine, 6, 2, 3.0);
    const Trajectory b = random_trajectory(engine, 5, 2, 3.0);
    const Trajectory filler = random_trajectory(engine, 4, 2, 50.0);

    std::vector<double> full_values;
    full_values.insert(full_values.end(), a.values().begin(), a.values().end());
    full_values.insert(full_values.end(), filler.values().begin(), filler.values().end());
    full_values.insert(full_values.end(), b.values().begin(), b.values().end());
    const Trajectory full(15, 2, std::move(full_values));

    const SubTaskLibrary library({{"a", a}, {"b", b}});
    const auto profiles = similarity_profiles(MetricKind::sse, library, full, 1);
    const Labeling z = assign_greedy_gaps(build_q(profiles, library.lengths(), full.size()),
                                          library.lengths());

    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(z.at(k) == 0);
    }
    for (std::size_t k = 10; k < 15; ++k) {
        CHECK(z.at(k) == 1);
    }
}

TEST_CASE("greedy gaps: claims are truncated by earlier assignments") {
    // Class 1 claims rows [2, 4) first; class 0's best remaining row is 1,
    // and its claim stops after one point instead of overwriting row 2.
    const QMatrix q = from_columns({{-5.0, 3.0, -5.0, -5.0}, {-8.0, -8.0, 9.0, 9.0}});
    const Labeling z = assign_greedy_gaps(q, {2, 2});
    CHECK(z.classes() == std::vector<int>{-1, 0, 1, 1});
}

TEST_CASE("greedy gaps: claims stop at the end of the task") {
    // The surviving value sits on the last row; only one of the two allowed
    // points exists.
    const QMatrix q = from_columns({{5.0, 5.0, -1.0}, {9.0, 9.0, -8.0}});
    const Labeling z = assign_greedy_gaps(q, {2, 2});
    CHECK(z.classes() == std::vector<int>{1, 1, 0});
}

TEST_CASE("greedy gaps invariants on random inputs") {
    std::mt19937_64 engine(13);
    for (int rep = 0; rep < 80; ++rep) {
        const std::size_t total = 4 + engine() % 40;
        const std::size_t m = 1 + engine() % 4;
        std::vector<SimilarityProfile> profiles;
        std::vector<std::size_t> lengths;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t t = 2 + engine() % (total - 2);
            std::vector<double> values(total - t + 1);
            for (double& v : values) {
                v = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
            }
            lengths.push_back(t);
            profiles.emplace_back(i, std::move(values));
        }

        const Labeling z = assign_greedy_gaps(build_q(profiles, lengths, total), lengths);
        const std::vector<Run> runs = runs_from_labeling(z);
        std::vector<int> seen(m, 0);
        for (const Run& run : runs) {
            CHECK(run.end - run.begin <= lengths[static_cast<std::size_t>(run.cls)]);
            ++seen[static_cast<std::size_t>(run.cls)];
        }
        for (int count : seen) {
            CHECK(count <= 1);  // at-most-once assumption
        }
        for (std::size_t r = 1; r < runs.size(); ++r) {
            CHECK(runs[r - 1].end <= runs[r].begin);  // disjoint
        }
    }
}

}  // TEST_SUITE
