#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "itree/errors.hpp"
#include "itree/generators.hpp"
#include "itree/oracle.hpp"
#include "itree/tree_finder.hpp"

using namespace itree;
using namespace itree::testing;

namespace {

// v = 0 with `spokes` neighbors; each neighbor starts `paths` disjoint paths
// of `length` vertices. The whole thing is a tree, hence K_4-free.
Graph broom_forest(int spokes, int paths, int length) {
  std::vector<Edge> e;
  int next = 1 + spokes;
  for (int s = 1; s <= spokes; ++s) {
    for (int p = 0; p < paths; ++p) {
      e.emplace_back(s, next);
      for (int i = 1; i < length; ++i) e.emplace_back(next + i - 1, next + i);
      next += length;
    }
    e.emplace_back(0, s);
  }
  return Graph(next, e);
}

void check_valid(const Graph& g, const TreeCertificate& cert) {
  INFO("strategy " << cert.strategy << ", size " << cert.vertices.size() << ", bound "
                   << cert.claimed_bound);
  CHECK(verify_certificate(g, cert) == CertificateStatus::kValid);
}

// v = 0 with `spokes` neighbors. Spoke i owns one path of `length`; every
// pair of spokes also shares a path hanging off both. Triangle-free.
Graph spoke_pairs(int spokes, int length) {
  std::vector<Edge> e;
  int next = 1 + spokes;
  auto add_path = [&](std::initializer_list<int> owners) {
    for (int s : owners) e.emplace_back(s, next);
    for (int i = 1; i < length; ++i) e.emplace_back(next + i - 1, next + i);
    next += length;
  };
  for (int s = 1; s <= spokes; ++s) {
    e.emplace_back(0, s);
    add_path({s});
  }
  for (int a = 1; a <= spokes; ++a)
    for (int b = a + 1; b <= spokes; ++b) add_path({a, b});
  return Graph(next, e);
}

}  // namespace

TEST_CASE("bounds") {
  CHECK(triangle_free_bound(1) == 1.0);
  CHECK(triangle_free_bound(10) == 4.0);
  CHECK(triangle_free_bound(17) == 5.0);
  CHECK(kr_free_bound(1, 4) == 1.0);
  CHECK(kr_free_bound(257, 4) == 2.0);
  CHECK(kr_free_bound(626, 5) == 2.0);
  CHECK(kr_free_bound(21, 4) == doctest::Approx(std::log(20.0) / (4 * std::log(4.0)) + 1));
  for (int n = 2; n < 500; ++n) CHECK(triangle_free_bound(n) >= std::sqrt(static_cast<double>(n)));
}

TEST_CASE("triangle-free examples") {
  SUBCASE("star takes the closed neighborhood") {
    auto cert = find_tree_triangle_free(star_graph(5), 0);
    CHECK(cert.vertices == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(cert.strategy == "triangle-free/star");
  }
  SUBCASE("single vertex and single edge") {
    CHECK(find_tree_triangle_free(Graph(1, {}), 0).vertices == VertexSet{0});
    CHECK(find_tree_triangle_free(path_graph(2), 1).vertices == VertexSet{0, 1});
  }
  SUBCASE("long path recurses") {
    auto g = path_graph(40);
    auto cert = find_tree_triangle_free(g, 20);
    CHECK(cert.strategy == "triangle-free/admissible-recursion");
    check_valid(g, cert);
  }
  SUBCASE("layered construction meets m at every root") {
    for (int m = 3; m <= 8; ++m) {
      auto g = ms_layered(m);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto cert = find_tree_triangle_free(g, v);
        check_valid(g, cert);
        CHECK(static_cast<int>(cert.vertices.size()) >= m);
      }
    }
  }
  SUBCASE("bad input carries a witness") {
    try {
      find_tree_triangle_free(complete_graph(3), 0);
      FAIL("expected WitnessError");
    } catch (const WitnessError& e) {
      CHECK(e.witness() == VertexSet{0, 1, 2});
    }
    try {
      find_tree_triangle_free(Graph(3, std::vector<Edge>{{0, 1}}), 0);
      FAIL("expected WitnessError");
    } catch (const WitnessError& e) {
      CHECK(e.witness() == VertexSet{2});
    }
    CHECK_THROWS_AS(find_tree_triangle_free(path_graph(3), 3), PreconditionError);
  }
}

TEST_CASE("triangle-free soundness on random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 70);
    const double p = 0.03 + 0.02 * static_cast<double>(seed % 10);
    auto g = random_triangle_free(n, p, seed);
    for (Vertex v : {0, n / 2, n - 1}) {
      auto cert = find_tree_triangle_free(g, v);
      check_valid(g, cert);
      CHECK(cert.vertices.size() >= static_cast<std::size_t>(std::ceil(std::sqrt(n))));
    }
  }
}

TEST_CASE("K_r-free examples") {
  SUBCASE("line graphs") {
    for (int r = 4; r <= 5; ++r) {
      for (int depth = 1; depth <= 3; ++depth) {
        auto g = line_graph_balanced_tree(r, depth);
        for (Vertex v = 0; v < g.num_vertices(); v += 3) check_valid(g, find_tree_kr_free(g, v, r));
      }
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(find_tree_kr_free(path_graph(4), 0, 3), PreconditionError);
    try {
      find_tree_kr_free(complete_graph(5), 0, 4);
      FAIL("expected WitnessError");
    } catch (const WitnessError& e) {
      CHECK(e.witness() == VertexSet{0, 1, 2, 3});
    }
  }
  SUBCASE("random K_r-free graphs") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const int r = 4 + static_cast<int>(seed % 2);
      const int n = 2 + static_cast<int>(seed * 7 % 150);
      auto g = random_kr_free(n, r, 0.05 + 0.03 * static_cast<double>(seed % 6), seed);
      check_valid(g, find_tree_kr_free(g, static_cast<Vertex>(seed % n), r));
    }
  }
}

TEST_CASE("K_4-free component-pair steps on large sparse trees") {
  SUBCASE("matching selection, shared attachment") {
    // 20 spokes x 20 paths of 450: n = 180020 > 20^4, no component above n/256.
    auto g = broom_forest(20, 20, 450);
    auto cert = find_tree_kr_free(g, 0, 4);
    CHECK(cert.strategy == "kr-free/component-pair-shared");
    check_valid(g, cert);
  }
  SUBCASE("matching selection, distinct attachments") {
    // 23 private paths plus C(23, 2) = 253 paths on spoke pairs, 1020 each:
    // n = 281543 > 23^4. Only the private paths survive the closure.
    auto g = spoke_pairs(23, 1020);
    CHECK_FALSE(has_clique(g, 3));
    auto cert = find_tree_kr_free(g, 0, 4);
    CHECK(cert.strategy == "kr-free/component-pair");
    check_valid(g, cert);
  }
  SUBCASE("star selection, shared attachment") {
    // 19 spokes: 19^2 < 380 components, so the selection is one spoke's star.
    auto g = broom_forest(19, 20, 425);
    auto cert = find_tree_kr_free(g, 0, 4);
    CHECK(cert.strategy == "kr-free/component-pair-shared");
    check_valid(g, cert);
  }
  SUBCASE("a big component short-circuits") {
    auto g = path_graph(600);
    auto cert = find_tree_kr_free(g, 0, 4);
    CHECK(cert.strategy == "kr-free/large-component");
    check_valid(g, cert);
  }
}

TEST_CASE("pick_component_pair") {
  auto p4 = path_graph(4);
  SUBCASE("shared attachment wins over a bigger apart pair") {
    const std::vector<Vertex> attach{0, 0, 2, 3};
    const std::vector<std::size_t> sizes{1, 1, 50, 1};
    CHECK(detail::pick_component_pair(p4, attach, sizes) == std::pair{0, 1});
  }
  SUBCASE("largest non-adjacent pair") {
    const std::vector<Vertex> attach{0, 1, 2, 3};
    const std::vector<std::size_t> sizes{5, 9, 1, 7};
    // (1, 3) has 16 and 1-3 are not adjacent; (0, 1) would be 14 but 0-1 is an edge.
    CHECK(detail::pick_component_pair(p4, attach, sizes) == std::pair{1, 3});
  }
  SUBCASE("ties go to the smallest pair") {
    const std::vector<Vertex> attach{0, 2, 3};
    const std::vector<std::size_t> sizes{4, 4, 4};
    CHECK(detail::pick_component_pair(p4, attach, sizes) == std::pair{0, 1});
  }
  SUBCASE("clique of attachments has no pair") {
    auto k3 = complete_graph(3);
    const std::vector<Vertex> attach{0, 1, 2};
    const std::vector<std::size_t> sizes{1, 2, 3};
    CHECK(detail::pick_component_pair(k3, attach, sizes) == std::pair{-1, -1});
  }
}

TEST_CASE("reroute_through_vertex") {
  auto c5 = cycle_graph(5);
  TreeCertificate t{{0, 1, 2, 3}, 0, 4.0, "given"};
  auto out = reroute_through_vertex(c5, t, 4);
  CHECK(out.vertices == VertexSet{0, 1, 4});
  CHECK(verify_certificate(c5, out) == CertificateStatus::kValid);

  SUBCASE("v already in the tree") {
    auto same = reroute_through_vertex(c5, t, 2);
    CHECK(same.vertices == t.vertices);
    TreeCertificate lone{{3}, 3, 1.0, "given"};
    auto grown = reroute_through_vertex(c5, lone, 3);
    CHECK(grown.vertices == VertexSet{2, 3});
    CHECK(verify_certificate(c5, grown) == CertificateStatus::kValid);
  }
  SUBCASE("long approach path is kept") {
    auto p = path_graph(9);
    TreeCertificate tail{{0, 1, 2}, 0, 3.0, "given"};
    auto far = reroute_through_vertex(p, tail, 8);
    CHECK(far.vertices.front() <= 3);
    CHECK(verify_certificate(p, far) == CertificateStatus::kValid);
  }
  SUBCASE("random graphs against the oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto g = random_connected(10, 0.3, seed);
      auto best = max_induced_tree_exact(g);
      TreeCertificate given{best.witness, best.witness.front(), 0.0, "oracle"};
      for (Vertex v = 0; v < 10; ++v) {
        auto cert = reroute_through_vertex(g, given, v);
        check_valid(g, cert);
        CHECK(static_cast<double>(cert.vertices.size()) >= 1.0 + best.size / 2.0);
      }
    }
  }
  SUBCASE("input must be a tree") {
    TreeCertificate cycle{{0, 1, 2, 3, 4}, 0, 0.0, ""};
    CHECK_THROWS_AS(reroute_through_vertex(c5, cycle, 0), PreconditionError);
  }
}

TEST_CASE("find_large_tree") {
  auto path = path_graph(30);
  auto whole = find_large_tree(path);
  CHECK(whole.strategy == "whole-graph");
  CHECK(whole.vertices.size() == 30);

  auto layered = ms_layered(6);
  auto cert = find_large_tree(layered);
  check_valid(layered, cert);
  CHECK(cert.strategy.rfind("triangle-free/", 0) == 0);

  auto lg = line_graph_balanced_tree(5, 3);
  auto kr = find_large_tree(lg);
  check_valid(lg, kr);
  CHECK(kr.strategy.rfind("kr-free/", 0) == 0);
}

TEST_CASE("certificates") {
  auto c5 = cycle_graph(5);
  CHECK(verify_certificate(c5, {{0, 1, 2}, 0, 3.0, ""}) == CertificateStatus::kValid);
  CHECK(verify_certificate(c5, {{0, 1, 2, 3, 4}, 0, 1.0, ""}) == CertificateStatus::kNotInducedTree);
  CHECK(verify_certificate(c5, {{0, 2}, 0, 1.0, ""}) == CertificateStatus::kNotInducedTree);
  CHECK(verify_certificate(c5, {{0, 7}, 0, 1.0, ""}) == CertificateStatus::kNotInducedTree);
  CHECK(verify_certificate(c5, {{0, 1}, 3, 1.0, ""}) == CertificateStatus::kRootMissing);
  CHECK(verify_certificate(c5, {{0, 1}, 0, 2.5, ""}) == CertificateStatus::kBoundUnmet);
  CHECK(std::string(to_string(CertificateStatus::kBoundUnmet)) == "bound-unmet");

  TreeCertificate cert{{1, 2, 3}, 2, 2.5, "triangle-free/star"};
  const auto text = certificate_to_json(cert);
  CHECK(text == R"({"root":2,"vertices":[1,2,3],"claimed_bound":2.5,"strategy":"triangle-free/star"})");
  std::istringstream in(text);
  auto back = certificate_from_json(in);
  CHECK(back.vertices == cert.vertices);
  CHECK(back.root == 2);
  CHECK(back.claimed_bound == 2.5);
  std::istringstream broken(R"({"root": 1})");
  CHECK_THROWS_AS(certificate_from_json(broken), ParseError);
}
