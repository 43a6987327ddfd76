#include "gtest/gtest.h"

#include "ueg/regions.hpp"

using namespace ueg;

namespace {

std::vector<Vertex> V(std::initializer_list<Vertex> list) { return list; }

}  // namespace

TEST(Labeling, ThreeByTwo) {
  const GridDims dims = make_dims(3, 2);
  VertexLabeling labels = label_vertices(dims, build_closed_90_trail(dims, {1, 1}));
  EXPECT_EQ(labels.with_label(Label::positive), V({{2, 1}, {3, 2}}));
  EXPECT_EQ(labels.with_label(Label::on_trail), V({{1, 1}, {2, 2}, {3, 1}}));
  EXPECT_EQ(labels.with_label(Label::negative), V({{1, 2}}));
  EXPECT_EQ(labels.at({1, 2}), Label::negative);
}

TEST(Labeling, RejectsOtherTrails) {
  EXPECT_THROW(label_vertices(make_dims(2, 2), build_180_trail(make_dims(2, 2), {1, 1})),
               std::invalid_argument);
}

// For a closed curve the left and right half-lines agree.
TEST(Labeling, LeftAndRightCastsAgree) {
  for (int m = 1; m <= 16; ++m) {
    for (int n = 1; n <= 16; ++n) {
      const GridDims dims = make_dims(m, n);
      for (const Vertex& v : all_vertices(dims)) {
        if (!divides_a_coordinate(dims, v)) continue;
        Trail t = build_closed_90_trail(dims, v);
        EXPECT_EQ(label_vertices(dims, t, CastSide::right),
                  label_vertices(dims, t, CastSide::left))
            << m << "x" << n << " at " << v;
      }
    }
  }
}

TEST(Labeling, RootIsOnTrailAndSomeNeighborIsPositive) {
  for (int m = 1; m <= 16; ++m) {
    for (int n = 1; n <= 16; ++n) {
      const GridDims dims = make_dims(m, n);
      for (const Vertex& v : all_vertices(dims)) {
        if (!divides_a_coordinate(dims, v)) continue;
        VertexLabeling labels = label_vertices(dims, build_closed_90_trail(dims, v));
        EXPECT_EQ(labels.at(v), Label::on_trail);
        int positive = 0;
        for (const Vertex& w : neighbors(dims, v)) positive += labels.at(w) == Label::positive;
        EXPECT_GE(positive, 1) << m << "x" << n << " at " << v;
      }
    }
  }
}

TEST(Labeling, LabelNames) {
  EXPECT_STREQ(to_string(Label::on_trail), "on_trail");
  EXPECT_STREQ(to_string(Label::positive), "positive");
  EXPECT_STREQ(to_string(Label::negative), "negative");
}
