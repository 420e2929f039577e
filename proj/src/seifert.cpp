#include "theta3/seifert.hpp"

#include <algorithm>
#include <set>

namespace theta3 {

SeifertData::SeifertData(std::vector<Int> invariants) {
    std::size_t ones = 0;
    for (const Int& a : invariants) {
        if (a < 1) fail(Errc::InvalidSeifertData, "Seifert invariant " + a.str() + " < 1");
        if (a == 1) ++ones;
    }
    if (ones > 1)
        fail(Errc::InvalidSeifertData, "more than one Seifert invariant equal to 1");
    for (std::size_t i = 0; i < invariants.size(); ++i)
        for (std::size_t j = i + 1; j < invariants.size(); ++j)
            if (gcd_int(invariants[i], invariants[j]) != 1)
                fail(Errc::InvalidSeifertData, "invariants " + invariants[i].str() + " and " +
                                                   invariants[j].str() + " are not coprime");
    for (Int& a : invariants)
        if (a != 1) fibers_.push_back(std::move(a));
    std::sort(fibers_.begin(), fibers_.end());
}

Int SeifertData::product() const {
    Int a = 1;
    for (const Int& f : fibers_) a *= f;
    return a;
}

std::string SeifertData::label() const {
    std::string s = "sigma(";
    for (std::size_t i = 0; i < fibers_.size(); ++i) {
        if (i) s += ",";
        s += fibers_[i].str();
    }
    return s + ")";
}

namespace {

// Negative continued fraction p/q = c1 - 1/(c2 - 1/(...)), all c >= 2.
// Requires p > q >= 1 coprime.
std::vector<Int> negative_continued_fraction(Int p, Int q) {
    std::vector<Int> cs;
    while (q > 0) {
        Int c = (p + q - 1) / q;  // ceil(p/q)
        cs.push_back(c);
        Int nq = c * q - p;
        p = std::move(q);
        q = std::move(nq);
    }
    return cs;
}

}  // namespace

PlumbingGraph canonical_plumbing(const SeifertData& s) {
    const std::vector<Int>& a = s.fibers();
    const Int prod = s.product();

    std::vector<Int> b(a.size());
    Int num = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int m = prod / a[i];
        // b_i * m = -1 mod a_i with 0 < b_i < a_i
        b[i] = mod_floor(-mod_inverse(m, a[i]), a[i]);
        num += b[i] * m;
    }
    if (num % prod != 0)
        fail(Errc::SolveFailure, "central weight is not integral for " + s.label());
    const Int b0 = num / prod;

    PlumbingGraph g;
    g.add_vertex("c", -b0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Int> cf = negative_continued_fraction(a[i], b[i]);
        std::string prev = "c";
        for (std::size_t j = 0; j < cf.size(); ++j) {
            std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            g.add_vertex(id, -cf[j]);
            g.add_edge(prev, id);
            prev = id;
        }
    }
    return g;
}

Int mubar_seifert(const SeifertData& s) {
    return mubar(canonical_plumbing(s)).value;
}

std::pair<SeifertData, SeifertData> splice_decompose(const SeifertData& s, std::size_t j) {
    const std::size_t n = s.count();
    if (n < 4 || j < 2 || j > n - 2)
        fail(Errc::IndexOutOfRange,
             "splice index " + std::to_string(j) + " outside [2, " +
                 std::to_string(n >= 2 ? n - 2 : 0) + "] for " + s.label());
    Int q = 1, p = 1;
    for (std::size_t i = 0; i < j; ++i) q *= s.fibers()[i];
    for (std::size_t i = j; i < n; ++i) p *= s.fibers()[i];
    std::vector<Int> left(s.fibers().begin(), s.fibers().begin() + j);
    left.push_back(p);
    std::vector<Int> right;
    right.push_back(q);
    right.insert(right.end(), s.fibers().begin() + j, s.fibers().end());
    return {SeifertData(std::move(left)), SeifertData(std::move(right))};
}

void validate_splice_tree(const SpliceTree& t) {
    if (t.nodes.empty()) fail(Errc::ParseError, "splice tree has no nodes");
    std::set<std::string> ids;
    for (const auto& node : t.nodes)
        if (!ids.insert(node.id).second)
            fail(Errc::ParseError, "duplicate splice node id '" + node.id + "'");
    if (t.edges.size() + 1 != t.nodes.size())
        fail(Errc::ParseError, "splice edges do not form a tree on the nodes");
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<std::size_t> dsu(t.nodes.size());
    for (std::size_t i = 0; i < dsu.size(); ++i) dsu[i] = i;
    auto find = [&](std::size_t v) {
        while (dsu[v] != v) v = dsu[v];
        return v;
    };
    for (const auto& e : t.edges) {
        if (e.node_a >= t.nodes.size() || e.node_b >= t.nodes.size())
            fail(Errc::ParseError, "splice edge references unknown node");
        for (auto [node, fiber] : {std::pair{e.node_a, e.fiber_a}, std::pair{e.node_b, e.fiber_b}}) {
            if (fiber < 1 || fiber > t.nodes[node].data.count())
                fail(Errc::IndexOutOfRange,
                     "fiber position " + std::to_string(fiber) + " invalid for node '" +
                         t.nodes[node].id + "'");
            if (!used.insert({node, fiber}).second)
                fail(Errc::ParseError, "fiber of node '" + t.nodes[node].id +
                                           "' participates in more than one splice");
        }
        std::size_t ra = find(e.node_a), rb = find(e.node_b);
        if (ra == rb) fail(Errc::ParseError, "splice edges contain a cycle");
        dsu[ra] = rb;
    }
}

Int splice_mubar(const SpliceTree& t) {
    validate_splice_tree(t);
    Int total = 0;
    for (const auto& node : t.nodes) total += mubar_seifert(node.data);
    return total;
}

bool is_algebraic_splice(const SeifertData& left, std::size_t left_fiber,
                         const SeifertData& right, std::size_t right_fiber) {
    if (!left.is_triple() || !right.is_triple())
        fail(Errc::InvalidSeifertData, "algebraic-splice criterion needs three-fiber data");
    if (left_fiber < 1 || left_fiber > 3 || right_fiber < 1 || right_fiber > 3)
        fail(Errc::IndexOutOfRange, "fiber position must be 1, 2 or 3");
    Int r = left.fibers()[left_fiber - 1];
    Int rp = right.fibers()[right_fiber - 1];
    Int rest = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i != left_fiber - 1) rest *= left.fibers()[i];
        if (i != right_fiber - 1) rest *= right.fibers()[i];
    }
    return r * rp > rest;
}

SeifertData surgery_family(const std::vector<Int>& base, const Int& k, int sign) {
    if (sign != 1 && sign != -1)
        fail(Errc::InvalidSeifertData, "surgery sign must be +1 or -1");
    if (k < 1) fail(Errc::InvalidSeifertData, "surgery parameter k must be >= 1");
    Int a = 1;
    for (const Int& f : base) a *= f;
    std::vector<Int> inv = base;
    inv.push_back(2 * a * k + sign);
    return SeifertData(std::move(inv));  // validates base and the new fiber together
}

}  // namespace theta3
