#pragma once

#include <vector>

#include "theta3/plumbing.hpp"

namespace theta3 {

/// The unique characteristic vector with 0/1 coordinates in the plumbing
/// basis: A.w = diag(A) mod 2.
struct WuClass {
    std::vector<int> coords;
};

struct MubarValue {
    Int value;      // (sign - w.w) / 8
    Int sign_term;  // signature of the intersection form
    Int ww_term;    // w^t A w
};

WuClass wu_class(const PlumbingGraph& g);

MubarValue mubar(const PlumbingGraph& g);

/// mubar mod 2, in {0, 1}.
int rochlin(const PlumbingGraph& g);

/// Negative-definiteness gate plus the mubar sign test. When the form is
/// negative definite and mubar < 0, the boundary cannot bound a homology
/// ball and has infinite order in the homology cobordism group.
struct MubarObstruction {
    bool applies;               // intersection form negative definite
    bool bounds_ball_excluded;  // applies and mubar < 0
};

MubarObstruction mubar_obstruction(const PlumbingGraph& g);

}  // namespace theta3
