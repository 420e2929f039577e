#include "theta3/plumbing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace theta3 {

Int mod_inverse(const Int& a, const Int& m) {
    // extended Euclid on (a mod m, m)
    Int r0 = m, r1 = mod_floor(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_floor(t0, m);
}

long long to_longlong(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer does not fit in 64 bits");
    return x.convert_to<long long>();
}

void PlumbingGraph::add_vertex(const std::string& id, Int weight) {
    if (has_vertex(id)) fail(Errc::ParseError, "duplicate vertex id '" + id + "'");
    vertices_.push_back(Vertex{id, std::move(weight)});
    dsu_.push_back(dsu_.size());
}

std::size_t PlumbingGraph::dsu_find(std::size_t v) const {
    while (dsu_[v] != v) v = dsu_[v];
    return v;
}

void PlumbingGraph::add_edge(const std::string& a, const std::string& b) {
    if (!has_vertex(a)) fail(Errc::ParseError, "edge references unknown vertex '" + a + "'");
    if (!has_vertex(b)) fail(Errc::ParseError, "edge references unknown vertex '" + b + "'");
    std::size_t i = index_of(a), j = index_of(b);
    if (i == j) fail(Errc::ParseError, "self-loop at vertex '" + a + "'");
    if (i > j) std::swap(i, j);
    if (has_edge(i, j)) fail(Errc::ParseError, "duplicate edge {" + a + "," + b + "}");
    std::size_t ri = dsu_find(i), rj = dsu_find(j);
    if (ri == rj)
        fail(Errc::ParseError, "edge {" + a + "," + b + "} would close a cycle");
    dsu_[ri] = rj;
    edges_.emplace_back(i, j);
}

bool PlumbingGraph::has_vertex(const std::string& id) const {
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [&](const Vertex& v) { return v.id == id; });
}

std::size_t PlumbingGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    fail(Errc::InvalidSite, "unknown vertex '" + id + "'");
}

bool PlumbingGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::find(edges_.begin(), edges_.end(), std::make_pair(i, j)) != edges_.end();
}

std::size_t PlumbingGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (const auto& [a, b] : edges_)
        if (a == i || b == i) ++d;
    return d;
}

IntersectionMatrix build_intersection_matrix(const PlumbingGraph& g) {
    const std::size_t n = g.size();
    IntersectionMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, g.vertices()[i].weight);
    for (const auto& [i, j] : g.edges()) m.set(i, j, 1);
    return m;
}

bool IntersectionMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

namespace {

// Symbolic minimum-degree elimination order: repeatedly removes the active
// index with the fewest active neighbours in the nonzero pattern, adding
// clique fill among its neighbours. On forests this finds a perfect
// elimination order (leaves first, zero fill).
std::vector<std::size_t> min_degree_order(const IntersectionMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !m(i, j).is_zero()) adj[i][j] = 1;
    std::vector<char> active(n, 1);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_deg = n + 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            std::size_t d = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (active[j] && adj[i][j]) ++d;
            if (d < best_deg) {
                best_deg = d;
                best = i;
            }
        }
        order.push_back(best);
        active[best] = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (!active[x] || !adj[best][x]) continue;
            for (std::size_t y = 0; y < n; ++y)
                if (active[y] && y != x && adj[best][y]) adj[x][y] = adj[y][x] = 1;
        }
    }
    return order;
}

}  // namespace

Int determinant(const IntersectionMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;  // empty product

    const std::vector<std::size_t> order = min_degree_order(m);
    std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = m(order[i], order[j]);

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && b[r][k].is_zero()) ++r;
            if (r == n) return 0;
            std::swap(b[k], b[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if (b[i][j].is_zero() && (b[i][k].is_zero() || b[k][j].is_zero())) continue;
                b[i][j] = (b[k][k] * b[i][j] - b[i][k] * b[k][j]) / prev;
            }
            b[i][k] = 0;
        }
        prev = b[k][k];
    }
    return sign * b[n - 1][n - 1];
}

FormSummary signature(const IntersectionMatrix& m) {
    const std::size_t n = m.size();
    FormSummary out;
    out.rank = n;
    out.determinant = determinant(m);
    out.parity = Parity::even;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) % 2 != 0) {
            out.parity = Parity::odd;
            break;
        }

    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    std::vector<char> active(n, 1);
    std::size_t remaining = n;

    auto active_nonzeros = [&](std::size_t i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (active[j] && j != i && !a[i][j].is_zero()) ++c;
        return c;
    };

    while (remaining > 0) {
        // diagonal pivot, preferring sparse rows to limit fill on trees
        std::size_t k = n, kdeg = n + 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || a[i][i].is_zero()) continue;
            std::size_t d = active_nonzeros(i);
            if (d < kdeg) {
                kdeg = d;
                k = i;
            }
        }
        if (k < n) {
            if (a[k][k] > 0)
                ++out.n_plus;
            else
                ++out.n_minus;
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i] || i == k || a[i][k].is_zero()) continue;
                Rat f = a[i][k] / a[k][k];
                for (std::size_t j = 0; j < n; ++j) {
                    if (!active[j] || j == k) continue;
                    if (a[k][j].is_zero()) continue;
                    a[i][j] -= f * a[k][j];
                }
                a[i][k] = 0;
            }
            active[k] = 0;
            --remaining;
            continue;
        }
        // all active diagonals are zero; look for a hyperbolic pair
        std::size_t hk = n, hl = n;
        for (std::size_t i = 0; i < n && hk == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (active[j] && !a[i][j].is_zero()) {
                    hk = i;
                    hl = j;
                    break;
                }
            }
        }
        if (hk == n) {
            out.n_zero += remaining;
            break;
        }
        ++out.n_plus;
        ++out.n_minus;
        const Rat piv = a[hk][hl];
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == hk || i == hl) continue;
            if (a[i][hk].is_zero() && a[i][hl].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == hk || j == hl) continue;
                Rat corr = (a[i][hk] * a[hl][j] + a[i][hl] * a[hk][j]) / piv;
                if (!corr.is_zero()) a[i][j] -= corr;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            a[i][hk] = a[i][hl] = a[hk][i] = a[hl][i] = 0;
        }
        active[hk] = active[hl] = 0;
        remaining -= 2;
    }
    return out;
}

bool is_homology_sphere(const PlumbingGraph& g) {
    return abs_int(determinant(build_intersection_matrix(g))) == 1;
}

Int quadratic_form(const IntersectionMatrix& m, const std::vector<int>& w) {
    std::vector<Int> v(w.begin(), w.end());
    return quadratic_form(m, v);
}

Int quadratic_form(const IntersectionMatrix& m, const std::vector<Int>& w) {
    const std::size_t n = m.size();
    if (w.size() != n) throw std::invalid_argument("quadratic_form: size mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j] == 0) continue;
            acc += w[i] * m(i, j) * w[j];
        }
    }
    return acc;
}

namespace {

std::string fresh_id(const PlumbingGraph& g) {
    for (std::size_t k = 0;; ++k) {
        std::string id = "bu" + std::to_string(k);
        if (!g.has_vertex(id)) return id;
    }
}

}  // namespace

PlumbingGraph graph_blowup(const PlumbingGraph& g, const BlowupSite& site) {
    PlumbingGraph out;
    const std::string nv = fresh_id(g);
    if (site.kind == BlowupSite::Kind::vertex) {
        if (!g.has_vertex(site.a)) fail(Errc::InvalidSite, "unknown vertex '" + site.a + "'");
        for (const auto& v : g.vertices())
            out.add_vertex(v.id, v.id == site.a ? Int(v.weight - 1) : v.weight);
        for (const auto& [i, j] : g.edges())
            out.add_edge(g.vertices()[i].id, g.vertices()[j].id);
        out.add_vertex(nv, -1);
        out.add_edge(site.a, nv);
        return out;
    }
    if (!g.has_vertex(site.a) || !g.has_vertex(site.b))
        fail(Errc::InvalidSite, "unknown edge endpoint");
    std::size_t u = g.index_of(site.a), v = g.index_of(site.b);
    if (!g.has_edge(u, v))
        fail(Errc::InvalidSite, "no edge {" + site.a + "," + site.b + "}");
    for (const auto& vx : g.vertices()) {
        Int w = vx.weight;
        if (vx.id == site.a || vx.id == site.b) w -= 1;
        out.add_vertex(vx.id, w);
    }
    for (const auto& [i, j] : g.edges()) {
        if ((i == std::min(u, v) && j == std::max(u, v))) continue;  // replaced by subdivision
        out.add_edge(g.vertices()[i].id, g.vertices()[j].id);
    }
    out.add_vertex(nv, -1);
    out.add_edge(site.a, nv);
    out.add_edge(nv, site.b);
    return out;
}

std::vector<Rat> solve_symmetric(const IntersectionMatrix& m, const std::vector<Int>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_symmetric: size mismatch");
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
        a[i][n] = Rat(rhs[i]);
    }
    // elimination in a fill-reducing column order; plain partial pivoting
    const std::vector<std::size_t> order = min_degree_order(m);
    std::vector<char> used_row(n, 0);
    std::vector<std::size_t> pivot_row_of_col(n, 0);
    for (std::size_t oc = 0; oc < n; ++oc) {
        const std::size_t col = order[oc];
        std::size_t piv = n;
        for (std::size_t r = 0; r < n; ++r)
            if (!used_row[r] && !a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == n) fail(Errc::SolveFailure, "singular linear system");
        used_row[piv] = 1;
        pivot_row_of_col[col] = piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == piv || a[r][col].is_zero()) continue;
            Rat f = a[r][col] / a[piv][col];
            for (std::size_t j = 0; j <= n; ++j) {
                if (a[piv][j].is_zero()) continue;
                a[r][j] -= f * a[piv][j];
            }
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t r = pivot_row_of_col[col];
        x[col] = a[r][n] / a[r][col];
    }
    return x;
}

}  // namespace theta3
