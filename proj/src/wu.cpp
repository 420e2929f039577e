#include "theta3/wu.hpp"

#include <cstdint>

namespace theta3 {

namespace {

// Dense GF(2) solve of A x = diag(A), rows packed into 64-bit words with the
// right-hand side in the last bit column. A has odd determinant here, so the
// system is uniquely solvable.
std::vector<int> solve_wu_gf2(const IntersectionMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t words = (n + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    auto set_bit = [&](std::size_t r, std::size_t c) { rows[r][c / 64] ^= std::uint64_t(1) << (c % 64); };
    auto get_bit = [&](std::size_t r, std::size_t c) -> bool {
        return (rows[r][c / 64] >> (c % 64)) & 1u;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (mod_floor(m(i, j), 2) == 1) set_bit(i, j);
        if (mod_floor(m(i, i), 2) == 1) set_bit(i, n);  // rhs = diagonal
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !get_bit(piv, col)) ++piv;
        if (piv == n) fail(Errc::SolveFailure, "Wu system singular mod 2");
        std::swap(rows[col], rows[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || !get_bit(r, col)) continue;
            for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[col][w];
        }
    }
    std::vector<int> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = get_bit(i, n) ? 1 : 0;
    return x;
}

void require_unimodular(const Int& det, std::size_t vertices) {
    if (abs_int(det) != 1)
        fail(Errc::NotHomologySphere,
             "plumbing boundary is not a homology sphere (|det| != 1, " +
                 std::to_string(vertices) + " vertices)");
}

// Solves for the Wu class and verifies A.w = diag(A) mod 2 over the integers.
std::vector<int> wu_coords(const IntersectionMatrix& m) {
    std::vector<int> w = solve_wu_gf2(m);
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (w[j]) acc += m(i, j);
        if (mod_floor(acc - m(i, i), 2) != 0)
            fail(Errc::SolveFailure, "Wu class failed characteristic verification");
    }
    return w;
}

MubarValue mubar_from(const IntersectionMatrix& m, const FormSummary& fs) {
    Int ww = quadratic_form(m, wu_coords(m));
    Int diff = fs.signature() - ww;
    if (diff % 8 != 0)
        fail(Errc::NonDivisibleBy8, "sign - w.w = " + diff.str() + " is not divisible by 8");
    return MubarValue{diff / 8, fs.signature(), ww};
}

}  // namespace

WuClass wu_class(const PlumbingGraph& g) {
    IntersectionMatrix m = build_intersection_matrix(g);
    require_unimodular(determinant(m), g.size());
    return WuClass{wu_coords(m)};
}

MubarValue mubar(const PlumbingGraph& g) {
    IntersectionMatrix m = build_intersection_matrix(g);
    FormSummary fs = signature(m);
    require_unimodular(fs.determinant, g.size());
    return mubar_from(m, fs);
}

int rochlin(const PlumbingGraph& g) {
    return mod_floor(mubar(g).value, 2).convert_to<int>();
}

MubarObstruction mubar_obstruction(const PlumbingGraph& g) {
    IntersectionMatrix m = build_intersection_matrix(g);
    FormSummary fs = signature(m);
    require_unimodular(fs.determinant, g.size());
    bool applies = fs.negative_definite();
    bool excluded = applies && mubar_from(m, fs).value < 0;
    return MubarObstruction{applies, excluded};
}

}  // namespace theta3
