#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "theta3/errors.hpp"
#include "theta3/numeric.hpp"

namespace theta3 {

/// Weighted forest describing a plumbed 4-manifold. Vertices keep insertion
/// order; that order is canonical for intersection-matrix rows and for the
/// Wu-class coordinates downstream.
class PlumbingGraph {
public:
    struct Vertex {
        std::string id;
        Int weight;
    };

    void add_vertex(const std::string& id, Int weight);
    void add_edge(const std::string& a, const std::string& b);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    // Edges as index pairs (i < j), in insertion order.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;
    bool has_edge(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t i) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::size_t> dsu_;  // union-find root per vertex, keeps the graph a forest

    std::size_t dsu_find(std::size_t v) const;
};

/// Dense symmetric integer matrix; for plumbing graphs the diagonal carries
/// the weights and off-diagonal entries are 1 exactly on edges.
class IntersectionMatrix {
public:
    IntersectionMatrix() = default;
    explicit IntersectionMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Int& v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }
    bool is_symmetric() const;

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

enum class Parity { even, odd };

struct FormSummary {
    std::size_t rank = 0;
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    Int determinant;
    Parity parity = Parity::even;

    Int signature() const { return Int(n_plus) - Int(n_minus); }
    bool negative_definite() const { return n_minus == rank && rank > 0; }
};

IntersectionMatrix build_intersection_matrix(const PlumbingGraph& g);

/// Exact integer determinant by fraction-free (Bareiss) elimination. A
/// fill-reducing symmetric preorder keeps tree-shaped matrices near-linear.
Int determinant(const IntersectionMatrix& m);

/// Exact inertia over the rationals by symmetric elimination. A zero diagonal
/// pivot with a nonzero off-diagonal partner is consumed as a hyperbolic
/// 2x2 block contributing (+1, -1). No floating point.
FormSummary signature(const IntersectionMatrix& m);

bool is_homology_sphere(const PlumbingGraph& g);

/// w^t A w for a 0/1 (or any integer) coordinate vector w.
Int quadratic_form(const IntersectionMatrix& m, const std::vector<int>& w);
Int quadratic_form(const IntersectionMatrix& m, const std::vector<Int>& w);

struct BlowupSite {
    enum class Kind { vertex, edge } kind;
    std::string a;
    std::string b;  // unused for vertex sites

    static BlowupSite at_vertex(std::string id) {
        return BlowupSite{Kind::vertex, std::move(id), {}};
    }
    static BlowupSite on_edge(std::string u, std::string v) {
        return BlowupSite{Kind::edge, std::move(u), std::move(v)};
    }
};

/// Inserts a (-1)-vertex presenting the same boundary 3-manifold: at a vertex,
/// appended as a leaf with the site weight decreased by 1; on an edge,
/// subdividing it with both endpoint weights decreased by 1. Preserves |det|
/// and adds exactly one negative eigenvalue.
PlumbingGraph graph_blowup(const PlumbingGraph& g, const BlowupSite& site);

/// Solves A x = rhs exactly over the rationals. Throws SolveFailure when the
/// matrix is singular.
std::vector<Rat> solve_symmetric(const IntersectionMatrix& m, const std::vector<Int>& rhs);

}  // namespace theta3
