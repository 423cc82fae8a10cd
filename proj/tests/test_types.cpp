#include "corrseg/types.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace corrseg;

TEST_SUITE("types") {

TEST_CASE("trajectory validates at construction") {
    CHECK_NOTHROW(Trajectory(2, 1, {0.0, 1.0}));
    CHECK_THROWS_AS(Trajectory(1, 1, {0.0}), std::invalid_argument);          // T < 2
    CHECK_THROWS_AS(Trajectory(2, 0, {}), std::invalid_argument);             // d < 1
    CHECK_THROWS_AS(Trajectory(2, 2, {0.0, 1.0}), std::invalid_argument);     // wrong size
    CHECK_THROWS_AS(Trajectory(2, 1, {0.0, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory(2, 1, {0.0, INFINITY}), std::invalid_argument);
}

TEST_CASE("trajectory from_rows rejects ragged input") {
    CHECK_THROWS_AS(Trajectory::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
    const Trajectory t = Trajectory::from_rows({{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}});
    CHECK(t.size() == 3);
    CHECK(t.dim() == 2);
    CHECK(t(2, 1) == 6.0);
}

TEST_CASE("library validates names and dimensions") {
    const Trajectory a(2, 2, {0, 0, 1, 1});
    const Trajectory b(3, 2, {0, 0, 1, 1, 2, 2});
    const Trajectory c(2, 3, {0, 0, 0, 1, 1, 1});

    CHECK_THROWS_AS(SubTaskLibrary({}), std::invalid_argument);
    CHECK_THROWS_AS(SubTaskLibrary({{"", a}}), std::invalid_argument);
    CHECK_THROWS_AS(SubTaskLibrary({{"x", a}, {"x", b}}), std::invalid_argument);
    CHECK_THROWS_AS(SubTaskLibrary({{"x", a}, {"y", c}}), std::invalid_argument);

    const SubTaskLibrary lib({{"x", a}, {"y", b}});
    CHECK(lib.size() == 2);
    CHECK(lib.dim() == 2);
    CHECK(lib.lengths() == std::vector<std::size_t>{2, 3});
    CHECK(lib.names() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("profile and labeling validate entries") {
    CHECK_THROWS_AS(SimilarityProfile(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimilarityProfile(0, {1.0, NAN}), std::invalid_argument);

    CHECK_THROWS_AS(Labeling({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Labeling({0, -2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Labeling({0, 1}, 1), std::invalid_argument);  // class >= M
    CHECK_NOTHROW(Labeling({-1, -1}, 0));
}

TEST_CASE("q matrix starts at the sentinel") {
    const QMatrix q(3, 2);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(q.at(k, i) == kNegInf);
        }
    }
    CHECK(kNegInf < std::numeric_limits<double>::lowest());
    CHECK_THROWS_AS(QMatrix(0, 1), std::invalid_argument);
}

TEST_CASE("runs_from_labeling examples") {
    CHECK(runs_from_labeling(Labeling({0, 0, 1, 1, 1}, 2)) ==
          std::vector<Run>{{0, 0, 2}, {1, 2, 5}});
    CHECK(runs_from_labeling(Labeling({-1, -1, -1}, 1)).empty());
    CHECK(runs_from_labeling(Labeling({2, -1, 2}, 3)) == std::vector<Run>{{2, 0, 1}, {2, 2, 3}});
}

TEST_CASE("runs reconstruct the labeling exactly") {
    std::mt19937_64 engine(7);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t length = 1 + engine() % 40;
        const std::size_t m = 1 + engine() % 4;
        std::vector<int> classes(length);
        for (int& c : classes) {
            c = static_cast<int>(engine() % (m + 1)) - 1;
        }
        const Labeling labeling(classes, m);

        std::vector<int> rebuilt(length, Labeling::kGap);
        for (const Run& run : runs_from_labeling(labeling)) {
            CHECK(run.begin < run.end);
            for (std::size_t k = run.begin; k < run.end; ++k) {
                rebuilt[k] = run.cls;
            }
        }
        CHECK(rebuilt == labeling.classes());
    }
}

TEST_CASE("segmentation result validates starts") {
    Labeling labeling({0, 0, -1, -1}, 1);
    CHECK_THROWS_AS(make_segmentation_result(labeling, {std::size_t{3}}, {2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_segmentation_result(labeling, {}, {2}), std::invalid_argument);
    const SegmentationResult result =
        make_segmentation_result(labeling, {std::size_t{2}}, {2});
    CHECK(result.runs == std::vector<Run>{{0, 0, 2}});
}

}  // TEST_SUITE
