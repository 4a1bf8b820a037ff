#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>

#include "itree/graph.hpp"

namespace itree {

/// A vertex set claimed to induce a tree through `root`, together with the
/// size guarantee it was produced under.
struct TreeCertificate {
  VertexSet vertices;
  Vertex root = 0;
  double claimed_bound = 0.0;
  std::string strategy;
};

enum class CertificateStatus { kValid, kNotInducedTree, kRootMissing, kBoundUnmet };

/// "valid", "not-induced-tree", "root-missing", "bound-unmet".
const char* to_string(CertificateStatus status);

/// Checks, in order: vertices are distinct, in range and induce a tree;
/// root is among them; |vertices| >= claimed_bound.
CertificateStatus verify_certificate(const Graph& g, const TreeCertificate& cert);

/// sqrt(N - 1) + 1 for a graph on N vertices: the through-vertex guarantee
/// for connected triangle-free graphs (at least sqrt(N)).
double triangle_free_bound(int num_vertices);

/// ln(N - 1) / (4 ln r) + 1 for N >= 2, and 1 for N = 1. Values within 1e-9
/// of an integer are snapped to it.
double kr_free_bound(int num_vertices, int r);

/// Induced tree through v of size >= triangle_free_bound(|V|).
///
/// Either N[v] is already a big enough star, or the components hanging off
/// N(v) are weighted by size, an admissible subset is chosen with
/// select_weighted, and the search recurses into each chosen component
/// through its unique chosen attachment vertex.
///
/// Throws WitnessError when g is disconnected (witness: a component missing
/// v) or has a triangle (witness: the triangle).
TreeCertificate find_tree_triangle_free(const Graph& g, Vertex v);

/// Induced tree through v of size >= kr_free_bound(|V|, r) in a connected
/// K_r-free graph, r >= 4. Throws WitnessError on disconnected input or an
/// r-clique (witness: the clique), InternalError if a counting step that
/// can't fail on valid input does.
TreeCertificate find_tree_kr_free(const Graph& g, Vertex v, int r);

/// Given an induced tree t of connected g, an induced tree through v with at
/// least 1 + |t|/2 vertices: walk a shortest path from v to t, split t
/// around the attachment points of the path's second-to-last vertex, and
/// keep one color class of the resulting tree of pieces.
TreeCertificate reroute_through_vertex(const Graph& g, const TreeCertificate& t, Vertex v);

/// Largest certificate over a sample of roots, dispatching to the
/// triangle-free finder or the K_r-free finder for the smallest r with no
/// r-clique. A graph that is itself a tree is returned whole.
TreeCertificate find_large_tree(const Graph& g);

/// {"root": int, "vertices": [int, ...], "claimed_bound": number, "strategy": string}
std::string certificate_to_json(const TreeCertificate& cert);
TreeCertificate certificate_from_json(std::istream& in);
TreeCertificate read_certificate_file(const std::string& path);

namespace detail {

/// Step 7 of the K_r-free finder. `attach[i]` is the attachment vertex of
/// candidate component i and `sizes[i]` its size. Returns the pair (i, j),
/// i < j, with the largest size sum among pairs sharing an attachment
/// vertex if any exist, otherwise among pairs whose attachments are
/// non-adjacent in g. Ties go to the lexicographically smallest pair.
/// Returns (-1, -1) when no valid pair exists.
std::pair<int, int> pick_component_pair(const Graph& g, std::span<const Vertex> attach,
                                        std::span<const std::size_t> sizes);

}  // namespace detail

}  // namespace itree
