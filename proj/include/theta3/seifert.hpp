#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "theta3/plumbing.hpp"
#include "theta3/wu.hpp"

namespace theta3 {

/// Pairwise-coprime Seifert invariants (a_1,...,a_n) naming the Seifert
/// fibered homology sphere with those multiplicities, always taken with the
/// algebraic-link orientation (boundary of the negative-definite resolution).
/// Normal form: sorted ascending with entries equal to 1 dropped (they do not
/// change the manifold); data normalizing to fewer than three fibers presents
/// the 3-sphere.
class SeifertData {
public:
    explicit SeifertData(std::vector<Int> invariants);

    const std::vector<Int>& fibers() const { return fibers_; }
    std::size_t count() const { return fibers_.size(); }
    Int product() const;
    bool is_triple() const { return fibers_.size() == 3; }
    std::string label() const;  // "sigma(2,3,7)"

    bool operator==(const SeifertData& o) const { return fibers_ == o.fibers_; }

private:
    std::vector<Int> fibers_;
};

/// Star-shaped negative-definite plumbing bounding the Seifert sphere:
/// central weight -b0 and one arm per fiber carrying the negative continued
/// fraction of a_i/b_i, where b_i (a/a_i) = -1 mod a_i, 0 < b_i < a_i, and
/// b0 = (1 + sum b_i a/a_i) / a. Always has |det| = 1.
PlumbingGraph canonical_plumbing(const SeifertData& s);

Int mubar_seifert(const SeifertData& s);

/// Splits along the j-th fiber gap (2 <= j <= n-2): left gets the first j
/// fibers plus the product of the rest, right gets the product of the first
/// j fibers plus the rest. mubar is additive over this split.
std::pair<SeifertData, SeifertData> splice_decompose(const SeifertData& s, std::size_t j);

struct SpliceTree {
    struct Node {
        std::string id;
        SeifertData data;
    };
    struct Edge {
        std::size_t node_a;
        std::size_t fiber_a;  // 1-based position into the node's fiber list
        std::size_t node_b;
        std::size_t fiber_b;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

/// Structural validation: tree-shaped, fiber positions valid, every
/// (node, fiber) pair spliced at most once.
void validate_splice_tree(const SpliceTree& t);

/// Sum of mubar over the nodes (mubar is additive over splicing).
Int splice_mubar(const SpliceTree& t);

/// Splice of two Seifert triples along the given fibers (1-based positions)
/// is the link of an algebraic singularity iff r r' > p p' q q', where r, r'
/// are the spliced fibers.
bool is_algebraic_splice(const SeifertData& left, std::size_t left_fiber,
                         const SeifertData& right, std::size_t right_fiber);

/// The Dehn-surgery family sigma(a_1,...,a_{n-1}, 2ak + sign) with
/// a = a_1...a_{n-1}; mubar and nu vanish on these for every k >= 1.
SeifertData surgery_family(const std::vector<Int>& base, const Int& k, int sign);

}  // namespace theta3
