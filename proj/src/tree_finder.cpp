#include "itree/tree_finder.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "itree/admissible.hpp"
#include "itree/errors.hpp"
#include "itree/ramsey.hpp"
#include "json.hpp"

namespace itree {

const char* to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::kValid:
      return "valid";
    case CertificateStatus::kNotInducedTree:
      return "not-induced-tree";
    case CertificateStatus::kRootMissing:
      return "root-missing";
    case CertificateStatus::kBoundUnmet:
      return "bound-unmet";
  }
  return "unknown";
}

CertificateStatus verify_certificate(const Graph& g, const TreeCertificate& cert) {
  if (cert.vertices.empty()) return CertificateStatus::kNotInducedTree;
  for (Vertex x : cert.vertices) {
    if (!g.contains(x)) return CertificateStatus::kNotInducedTree;
  }
  if (!is_induced_tree(g, cert.vertices)) return CertificateStatus::kNotInducedTree;
  if (std::find(cert.vertices.begin(), cert.vertices.end(), cert.root) == cert.vertices.end()) {
    return CertificateStatus::kRootMissing;
  }
  if (static_cast<double>(cert.vertices.size()) < cert.claimed_bound) {
    return CertificateStatus::kBoundUnmet;
  }
  return CertificateStatus::kValid;
}

namespace {

double snap(double x) {
  const double nearest = std::round(x);
  return std::abs(x - nearest) < 1e-9 ? nearest : x;
}

std::string join(std::span<const Vertex> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
  }
}

void require_connected(const Graph& g, Vertex v) {
  auto comps = components_of(g);
  if (comps.size() <= 1) return;
  for (auto& comp : comps) {
    if (!std::binary_search(comp.begin(), comp.end(), v)) {
      throw WitnessError("graph is disconnected; component " + join(comp) + " misses vertex " +
                             std::to_string(v),
                         std::move(comp));
    }
  }
}

// Maps a tree found in the subgraph induced by `local_to_host` back to host
// ids and appends it.
void append_mapped(VertexSet& out, const VertexSet& local, std::span<const Vertex> local_to_host) {
  for (Vertex x : local) out.push_back(local_to_host[x]);
}

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

VertexSet closed_neighborhood(const Graph& h, Vertex v) {
  VertexSet s = h.neighbors(v);
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

// For each component, the positions in N(v) (the A-side ids) of the
// neighbors of v that touch it.
std::vector<std::vector<int>> attachments(const Graph& h, Vertex v,
                                          const std::vector<VertexSet>& comps) {
  const auto& nv = h.neighbors(v);
  std::vector<int> a_id(h.num_vertices(), -1);
  for (std::size_t i = 0; i < nv.size(); ++i) a_id[nv[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex x : comps[c]) {
      for (Vertex y : h.neighbors(x)) {
        if (a_id[y] >= 0) out[c].push_back(a_id[y]);
      }
    }
    std::sort(out[c].begin(), out[c].end());
    out[c].erase(std::unique(out[c].begin(), out[c].end()), out[c].end());
  }
  return out;
}

// Runs `recurse` on the subgraph induced by {u} ∪ comp, rooted at u, and
// returns the tree in h's ids.
template <typename Recurse>
VertexSet solve_attached(const Graph& h, Vertex u, const VertexSet& comp, Recurse recurse) {
  VertexSet sub = comp;
  sub.insert(std::lower_bound(sub.begin(), sub.end(), u), u);
  const Vertex root = static_cast<Vertex>(std::lower_bound(sub.begin(), sub.end(), u) - sub.begin());
  VertexSet local = recurse(h.induced(sub), root);
  VertexSet out;
  append_mapped(out, local, sub);
  return out;
}

// Local tree search for connected triangle-free h. Returns (tree, strategy).
VertexSet grow_triangle_free(const Graph& h, Vertex v, std::string* strategy) {
  const int size = h.num_vertices();
  if (size <= 2) {
    if (strategy) *strategy = "base";
    return size == 1 ? VertexSet{v} : VertexSet{0, 1};
  }
  const long long n = size - 1;
  const long long d = h.degree(v);
  if (d * d >= n) {
    if (strategy) *strategy = "star";
    return closed_neighborhood(h, v);
  }

  const VertexSet excluded = closed_neighborhood(h, v);
  const auto comps = components_of(h, excluded);
  const auto attach = attachments(h, v, comps);

  WeightedBipartiteInstance inst;
  inst.a_count = static_cast<int>(d);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    inst.b_items.push_back({static_cast<double>(comps[c].size()), attach[c]});
  }
  const AdmissibleSelection sel = select_weighted(inst);

  std::vector<char> chosen(d, 0);
  for (int a : sel.a_chosen) chosen[a] = 1;
  const auto& nv = h.neighbors(v);
  VertexSet tree{v};
  for (int c : sel.b_chosen) {
    int a = -1;
    for (int x : attach[c]) {
      if (chosen[x]) a = x;
    }
    auto sub = solve_attached(h, nv[a], comps[c], [](const Graph& s, Vertex root) {
      return grow_triangle_free(s, root, nullptr);
    });
    tree.insert(tree.end(), sub.begin(), sub.end());
  }
  // Components sharing an attachment vertex each bring it along.
  std::sort(tree.begin(), tree.end());
  tree.erase(std::unique(tree.begin(), tree.end()), tree.end());
  if (strategy) *strategy = "admissible-recursion";
  return tree;
}

std::string dump_state(const Graph& h, Vertex v, const std::vector<VertexSet>& comps) {
  std::ostringstream os;
  os << "|V|=" << h.num_vertices() << " v=" << v << " deg=" << h.degree(v)
     << " components=" << comps.size() << " sizes=[";
  for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? "," : "") << comps[i].size();
  os << "]";
  return os.str();
}

VertexSet grow_kr_free(const Graph& h, Vertex v, int r, std::string* strategy) {
  auto tag = [&](const char* s) {
    if (strategy) *strategy = s;
  };
  const int size = h.num_vertices();
  if (size <= 2) {
    tag("base");
    return size == 1 ? VertexSet{v} : VertexSet{0, 1};
  }
  const long long n = size - 1;
  const double target = snap(std::log(static_cast<double>(n)) / (4.0 * std::log(static_cast<double>(r))));
  const int b = static_cast<int>(std::ceil(target));
  // deg >= n^(1/4), compared exactly on integers.
  auto at_least_fourth_root = [n](long long deg) {
    const __int128 d = deg;
    return d * d * d * d >= n;
  };
  const double r4 = std::pow(static_cast<double>(r), 4.0);

  const auto& nv = h.neighbors(v);
  if (at_least_fourth_root(static_cast<long long>(nv.size()))) {
    VertexSet tree = independent_set_of_size(h, r, b, nv);
    tree.push_back(v);
    tag("star");
    return sorted(std::move(tree));
  }

  std::vector<char> closed(size, 0);
  closed[v] = 1;
  for (Vertex u : nv) closed[u] = 1;
  for (Vertex w : nv) {
    VertexSet outside;
    for (Vertex y : h.neighbors(w)) {
      if (!closed[y]) outside.push_back(y);
    }
    if (at_least_fourth_root(static_cast<long long>(outside.size()))) {
      VertexSet tree = independent_set_of_size(h, r, b, outside);
      tree.push_back(v);
      tree.push_back(w);
      tag("double-star");
      return sorted(std::move(tree));
    }
  }

  const VertexSet excluded = closed_neighborhood(h, v);
  const auto comps = components_of(h, excluded);
  const auto attach = attachments(h, v, comps);
  auto recurse = [r](const Graph& s, Vertex root) { return grow_kr_free(s, root, r, nullptr); };

  // A component above n / r^4 carries the whole guarantee by itself.
  int big = -1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (static_cast<double>(comps[c].size()) * r4 > static_cast<double>(n) &&
        (big < 0 || comps[c].size() > comps[big].size())) {
      big = static_cast<int>(c);
    }
  }
  if (big >= 0) {
    VertexSet tree = solve_attached(h, nv[attach[big].front()], comps[big], recurse);
    tree.push_back(v);
    tag("large-component");
    return sorted(std::move(tree));
  }

  // Components with |V_i| >= sqrt(n) / r^2.
  std::vector<int> heavy;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const double s = static_cast<double>(comps[c].size());
    if (s * s * r4 >= static_cast<double>(n)) heavy.push_back(static_cast<int>(c));
  }
  if (static_cast<long long>(heavy.size()) <= static_cast<long long>(r) * r) {
    throw InternalError("K_r-free finder: at most r^2 components of size >= sqrt(n)/r^2",
                        dump_state(h, v, comps));
  }

  WeightedBipartiteInstance inst;
  inst.a_count = static_cast<int>(nv.size());
  for (int c : heavy) inst.b_items.push_back({static_cast<double>(comps[c].size()), attach[c]});
  const AdmissibleSelection sel = select_uniform(inst);
  if (static_cast<int>(sel.b_chosen.size()) < r + 1) {
    throw InternalError("K_r-free finder: uniform selection below r + 1 components",
                        dump_state(h, v, comps));
  }

  std::vector<char> chosen(nv.size(), 0);
  for (int a : sel.a_chosen) chosen[a] = 1;
  std::vector<Vertex> attach_vertex;
  std::vector<std::size_t> sizes;
  for (int item : sel.b_chosen) {
    const int c = heavy[item];
    Vertex u = -1;
    for (int a : attach[c]) {
      if (chosen[a]) u = nv[a];
    }
    attach_vertex.push_back(u);
    sizes.push_back(comps[c].size());
  }
  const auto [i, j] = detail::pick_component_pair(h, attach_vertex, sizes);
  if (i < 0) {
    throw InternalError("K_r-free finder: r + 1 attachment vertices form a clique",
                        dump_state(h, v, comps));
  }
  VertexSet tree{v};
  for (int pick : {i, j}) {
    auto sub = solve_attached(h, attach_vertex[pick], comps[heavy[sel.b_chosen[pick]]], recurse);
    tree.insert(tree.end(), sub.begin(), sub.end());
  }
  std::sort(tree.begin(), tree.end());
  tree.erase(std::unique(tree.begin(), tree.end()), tree.end());
  tag(attach_vertex[i] == attach_vertex[j] ? "component-pair-shared" : "component-pair");
  return tree;
}

}  // namespace

double triangle_free_bound(int num_vertices) {
  if (num_vertices < 1) throw PreconditionError("graph has no vertices");
  return std::sqrt(static_cast<double>(num_vertices - 1)) + 1.0;
}

double kr_free_bound(int num_vertices, int r) {
  if (num_vertices < 1) throw PreconditionError("graph has no vertices");
  if (r < 2) throw PreconditionError("r must be at least 2");
  if (num_vertices == 1) return 1.0;
  return snap(std::log(static_cast<double>(num_vertices - 1)) /
              (4.0 * std::log(static_cast<double>(r)))) +
         1.0;
}

TreeCertificate find_tree_triangle_free(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_connected(g, v);
  if (auto tri = find_triangle(g)) {
    throw WitnessError("graph contains the triangle " + join(*tri), *tri);
  }
  TreeCertificate cert;
  cert.root = v;
  cert.claimed_bound = triangle_free_bound(g.num_vertices());
  cert.vertices = grow_triangle_free(g, v, &cert.strategy);
  cert.strategy = "triangle-free/" + cert.strategy;
  return cert;
}

TreeCertificate find_tree_kr_free(const Graph& g, Vertex v, int r) {
  if (r < 4) throw PreconditionError("the K_r-free finder needs r >= 4");
  require_vertex(g, v);
  require_connected(g, v);
  if (auto clique = find_clique(g, r)) {
    throw WitnessError("graph contains the " + std::to_string(r) + "-clique " + join(*clique),
                       *clique);
  }
  TreeCertificate cert;
  cert.root = v;
  cert.claimed_bound = kr_free_bound(g.num_vertices(), r);
  cert.vertices = grow_kr_free(g, v, r, &cert.strategy);
  cert.strategy = "kr-free/" + cert.strategy;
  return cert;
}

namespace detail {

std::pair<int, int> pick_component_pair(const Graph& g, std::span<const Vertex> attach,
                                        std::span<const std::size_t> sizes) {
  const int k = static_cast<int>(attach.size());
  std::pair<int, int> shared{-1, -1}, apart{-1, -1};
  std::size_t shared_sum = 0, apart_sum = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::size_t sum = sizes[i] + sizes[j];
      if (attach[i] == attach[j]) {
        if (shared.first < 0 || sum > shared_sum) shared = {i, j}, shared_sum = sum;
      } else if (!g.has_edge(attach[i], attach[j])) {
        if (apart.first < 0 || sum > apart_sum) apart = {i, j}, apart_sum = sum;
      }
    }
  }
  return shared.first >= 0 ? shared : apart;
}

}  // namespace detail

TreeCertificate reroute_through_vertex(const Graph& g, const TreeCertificate& t, Vertex v) {
  require_vertex(g, v);
  if (g.num_vertices() == 0 || !is_connected(g)) {
    throw PreconditionError("rerouting needs a connected graph");
  }
  if (t.vertices.empty() || !std::all_of(t.vertices.begin(), t.vertices.end(),
                                         [&](Vertex x) { return g.contains(x); }) ||
      !is_induced_tree(g, t.vertices)) {
    throw PreconditionError("input certificate is not an induced tree of the graph");
  }
  const VertexSet tree_set = sorted(t.vertices);
  TreeCertificate out;
  out.root = v;
  out.strategy = "reroute";
  out.claimed_bound = 1.0 + static_cast<double>(tree_set.size()) / 2.0;

  if (std::binary_search(tree_set.begin(), tree_set.end(), v)) {
    out.vertices = tree_set;
    if (tree_set.size() == 1 && g.degree(v) > 0) {
      // A lone vertex is below 1 + 1/2; any neighbor fixes that.
      out.vertices = sorted({v, g.neighbors(v).front()});
    }
    out.claimed_bound = std::min(out.claimed_bound, static_cast<double>(out.vertices.size()));
    return out;
  }

  const auto path = shortest_path(g, v, tree_set);
  const Vertex last_off = path[path.size() - 2];

  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < tree_set.size(); ++i) pos[tree_set[i]] = static_cast<int>(i);
  VertexSet anchors;
  for (Vertex y : g.neighbors(last_off)) {
    if (pos[y] >= 0) anchors.push_back(y);
  }

  // Split T by nearest anchor in T's own metric, ties to the smaller anchor
  // index. Each class is a subtree containing its anchor.
  const Graph tree = g.induced(tree_set);
  const int tn = tree.num_vertices();
  std::vector<int> owner(tn, -1), best_dist(tn, -1);
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    std::vector<int> dist(tn, -1);
    std::vector<Vertex> queue{pos[anchors[a]]};
    dist[queue.front()] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (Vertex y : tree.neighbors(queue[q])) {
        if (dist[y] < 0) {
          dist[y] = dist[queue[q]] + 1;
          queue.push_back(y);
        }
      }
    }
    for (int x = 0; x < tn; ++x) {
      if (owner[x] < 0 || dist[x] < best_dist[x]) owner[x] = static_cast<int>(a), best_dist[x] = dist[x];
    }
  }

  // Pieces are adjacent when some g-edge joins them; 2-color that graph.
  const int k = static_cast<int>(anchors.size());
  std::vector<std::vector<int>> piece_adj(k);
  for (const auto& [x, y] : tree.edges()) {
    if (owner[x] != owner[y]) {
      piece_adj[owner[x]].push_back(owner[y]);
      piece_adj[owner[y]].push_back(owner[x]);
    }
  }
  std::vector<int> color(k, -1);
  for (int s = 0; s < k; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int y : piece_adj[queue[q]]) {
        if (color[y] < 0) {
          color[y] = 1 - color[queue[q]];
          queue.push_back(y);
        } else if (color[y] == color[queue[q]]) {
          std::ostringstream dump;
          dump << "tree=" << join(tree_set) << " v=" << v << " anchors=" << join(anchors);
          throw InternalError("claim assumption violated: piece graph is not bipartite", dump.str());
        }
      }
    }
  }

  std::size_t covered[2] = {0, 0};
  for (int x = 0; x < tn; ++x) ++covered[color[owner[x]]];
  const int keep = covered[1] > covered[0] ? 1 : 0;
  VertexSet result(path.begin(), path.end() - 1);
  for (int x = 0; x < tn; ++x) {
    if (color[owner[x]] == keep) result.push_back(tree_set[x]);
  }
  out.vertices = sorted(std::move(result));
  return out;
}

TreeCertificate find_large_tree(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw PreconditionError("empty graph");
  require_connected(g, 0);

  int r = 3;
  while (has_clique(g, r)) ++r;
  auto run = [&](Vertex root) {
    return r == 3 ? find_tree_triangle_free(g, root) : find_tree_kr_free(g, root, r);
  };

  if (g.num_edges() + 1 == static_cast<std::size_t>(n)) {
    TreeCertificate whole;
    whole.root = 0;
    whole.vertices.resize(n);
    for (int i = 0; i < n; ++i) whole.vertices[i] = i;
    whole.claimed_bound = r == 3 ? triangle_free_bound(n) : kr_free_bound(n, r);
    whole.strategy = "whole-graph";
    return whole;
  }

  constexpr int kMaxRoots = 32;
  TreeCertificate best;
  const int roots = std::min(n, kMaxRoots);
  for (int i = 0; i < roots; ++i) {
    const Vertex root = static_cast<Vertex>(static_cast<long long>(i) * n / roots);
    auto cert = run(root);
    if (best.vertices.empty() || cert.vertices.size() > best.vertices.size()) best = std::move(cert);
  }
  return best;
}

std::string certificate_to_json(const TreeCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["root"] = cert.root;
  doc["vertices"] = cert.vertices;
  doc["claimed_bound"] = cert.claimed_bound;
  doc["strategy"] = cert.strategy;
  return doc.dump();
}

TreeCertificate certificate_from_json(std::istream& in) {
  try {
    const auto doc = nlohmann::json::parse(in);
    TreeCertificate cert;
    cert.root = doc.at("root").get<Vertex>();
    cert.vertices = doc.at("vertices").get<VertexSet>();
    cert.claimed_bound = doc.at("claimed_bound").get<double>();
    if (doc.contains("strategy")) cert.strategy = doc["strategy"].get<std::string>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid certificate: ") + e.what());
  }
}

TreeCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return certificate_from_json(in);
}

}  // namespace itree
