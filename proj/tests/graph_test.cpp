// Copyright 2026 The Cathedral Authors.
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

#include "cathedral/graph.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"

namespace cathedral {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

TEST(VertexSetTest, SortsAndDeduplicates) {
  VertexSet s(std::vector<Vertex>{3, 1, 3, 2});
  EXPECT_THAT(s.ids(), ElementsAre(1, 2, 3));
  EXPECT_EQ(to_string(s), "{1,2,3}");
  EXPECT_EQ(to_string(VertexSet()), "{}");
}

TEST(VertexSetTest, SetAlgebra) {
  VertexSet a{1, 2, 3};
  VertexSet b{3, 4};
  EXPECT_EQ(a.unite(b), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(a.intersect(b), (VertexSet{3}));
  EXPECT_EQ(a.minus(b), (VertexSet{1, 2}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(a.intersects(VertexSet{7}));
  EXPECT_TRUE((VertexSet{1, 3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE(VertexSet().is_subset_of(a));
}

TEST(EdgeTest, Normalizes) {
  Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_EQ(e.other(2), 5);
  EXPECT_TRUE(e.touches(5));
}

TEST(GraphTest, BasicQueries) {
  Graph g = fixtures::t();
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 3));
  EXPECT_THAT(std::vector<Vertex>(g.neighbors(2).begin(), g.neighbors(2).end()),
              ElementsAre(0, 1, 3));
  EXPECT_EQ(g.index_of(3), 3u);
  EXPECT_FALSE(g.index_of(9).has_value());
}

TEST(GraphTest, RejectsInvalidEdges) {
  EXPECT_EQ(code_of([] { Graph::on_range(3, {{1, 1}}); }), Errc::kSelfLoop);
  EXPECT_EQ(code_of([] { Graph::on_range(3, {{0, 1}, {1, 0}}); }),
            Errc::kDuplicateEdge);
  EXPECT_EQ(code_of([] { Graph::on_range(3, {{0, 5}}); }), Errc::kUnknownVertex);
  EXPECT_EQ(code_of([] { Graph(VertexSet{-1, 0}, {}); }), Errc::kInvalidArgument);
}

TEST(GraphTest, InducedAndRemoved) {
  Graph g = fixtures::t();
  Graph h = induced_subgraph(g, VertexSet{0, 1, 2});
  EXPECT_EQ(h.size(), 3u);
  Graph r = remove_vertices(g, VertexSet{2});
  EXPECT_EQ(r.vertices(), (VertexSet{0, 1, 3}));
  EXPECT_EQ(r.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(code_of([&] { remove_vertices(g, VertexSet{7}); }), Errc::kNotSubset);
}

TEST(GraphTest, ContractMergesIntoSmallestId) {
  Graph g = fixtures::t();
  auto c = contract(g, VertexSet{0, 1});
  EXPECT_EQ(c.merged_vertex, 0);
  EXPECT_EQ(c.graph.vertices(), (VertexSet{0, 2, 3}));
  // 0-2 and 1-2 collapse into one edge.
  EXPECT_EQ(c.graph.edges(), (std::vector<Edge>{{0, 2}, {2, 3}}));
  EXPECT_EQ(c.origin_map.at(0), (VertexSet{0, 1}));
  EXPECT_EQ(c.origin_map.at(3), (VertexSet{3}));
  EXPECT_EQ(code_of([&] { contract(g, VertexSet()); }), Errc::kEmptySet);
}

TEST(GraphTest, AddEdges) {
  Graph g = fixtures::p4();
  Graph h = add_edges(g, {{0, 2}});
  EXPECT_TRUE(h.has_edge(0, 2));
  EXPECT_EQ(code_of([&] { add_edges(g, {{0, 1}}); }), Errc::kEdgeExists);
  EXPECT_EQ(code_of([&] { add_edges(g, {{0, 2}, {2, 0}}); }), Errc::kEdgeExists);
  EXPECT_EQ(code_of([&] { add_edges(g, {{0, 0}}); }), Errc::kSelfLoop);
  EXPECT_EQ(code_of([&] { add_edges(g, {{0, 9}}); }), Errc::kUnknownVertex);
}

TEST(GraphTest, NeighborhoodsAndCuts) {
  Graph g = fixtures::t();
  EXPECT_EQ(neighbors(g, VertexSet{0, 1}), (VertexSet{2}));
  EXPECT_EQ(neighbors(g, VertexSet{3}), (VertexSet{2}));
  EXPECT_EQ(cut_edges(g, VertexSet{0, 1}), (std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_EQ(edges_between(g, VertexSet{0}, VertexSet{1, 2}),
            (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(GraphTest, ConnectedComponentsOrderedByMinimum) {
  Graph g = Graph::on_range(6, {{4, 5}, {0, 3}, {1, 2}});
  EXPECT_THAT(connected_components(g),
              ElementsAre(VertexSet{0, 3}, VertexSet{1, 2}, VertexSet{4, 5}));
  EXPECT_TRUE(connected_components(Graph()).empty());
}

TEST(GraphTest, ComplementPairsLexicographic) {
  EXPECT_EQ(complement_pairs(fixtures::p4()),
            (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_TRUE(complement_pairs(fixtures::k4()).empty());
}

TEST(GraphTest, RelabelDense) {
  Graph g(VertexSet{2, 5, 9}, {{2, 9}, {5, 9}});
  EXPECT_FALSE(is_dense(g));
  Graph d = relabel_dense(g);
  EXPECT_TRUE(is_dense(d));
  EXPECT_EQ(d.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(EdgeListTest, ParsesCommentsAndBlankLines) {
  Graph g = parse_edge_list("# comment\n\nvertices 4\n0 1\n 2 3 \n# x\n1 2\n");
  EXPECT_EQ(g, fixtures::p4());
}

TEST(EdgeListTest, RoundTrip) {
  for (const Graph& g : {fixtures::t(), fixtures::c4_chord(), Graph()}) {
    EXPECT_EQ(parse_edge_list(render_edge_list(g)), g);
  }
  EXPECT_EQ(render_edge_list(fixtures::p4()), "vertices 4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(render_edge_list(Graph()), "vertices 0\n");
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  struct Case {
    std::string text;
    Errc code;
    std::string where;
  };
  const std::vector<Case> cases = {
      {"", Errc::kMissingHeader, "missing"},
      {"0 1\n", Errc::kMissingHeader, "line 1"},
      {"vertices x\n", Errc::kMissingHeader, "line 1"},
      {"vertices 3\n0 1 2\n", Errc::kMalformedLine, "line 2"},
      {"vertices 3\n0 a\n", Errc::kMalformedLine, "line 2"},
      {"vertices 3\n0 1\n\n1 3\n", Errc::kVertexOutOfRange, "line 4"},
      {"vertices 3\n2 2\n", Errc::kSelfLoop, "line 2"},
      {"vertices 3\n0 1\n1 0\n", Errc::kDuplicateEdge, "line 3"},
  };
  for (const auto& c : cases) {
    try {
      parse_edge_list(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), c.code) << c.text;
      EXPECT_EQ(e.category(), ErrorCategory::kParse);
      EXPECT_THAT(e.what(), HasSubstr(c.where)) << c.text;
    }
  }
}

TEST(EdgeListTest, RenderNeedsDenseIds) {
  Graph g(VertexSet{0, 2}, {{0, 2}});
  EXPECT_EQ(code_of([&] { render_edge_list(g); }), Errc::kNonDenseIds);
}

TEST(ErrorTest, Categories) {
  EXPECT_EQ(category(Errc::kMalformedDocument), ErrorCategory::kParse);
  EXPECT_EQ(category(Errc::kNotSaturated), ErrorCategory::kPrecondition);
  EXPECT_EQ(category(Errc::kNonDenseIds), ErrorCategory::kPrecondition);
  EXPECT_EQ(category(Errc::kBudgetExceeded), ErrorCategory::kBudget);
  EXPECT_EQ(category(Errc::kEquivalenceViolation), ErrorCategory::kInternal);
  EXPECT_EQ(category(Errc::kFoundationNotMinimum), ErrorCategory::kInternal);
  EXPECT_EQ(to_string(Errc::kUpperSetAttachment), "UpperSetAttachment");
}

}  // namespace
}  // namespace cathedral
