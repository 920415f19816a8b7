#pragma once

// Built-in identity sets, constructed in code.

#include "gradstar/freealg.hpp"
#include "gradstar/utalg.hpp"

#include <string>
#include <vector>

namespace gradstar {

struct NamedIdentity {
    std::string label;
    Polynomial poly;
};

// [x_1, x_2] on the neutral component, x* - x on one-dimensional components
// and, for odd m, the two families relating neighbours of the middle index.
std::vector<NamedIdentity> finest_reflection_identities(int m);
// [x_1, x_2] on the neutral component and x* + x on one-dimensional components.
// Throws UnsupportedInvolution for odd m.
std::vector<NamedIdentity> finest_symplectic_identities(int m);
// UT_3 with the Z_2 grading (0,1,0): every labelled family expanded over the
// admissible symmetric/skew kinds.
std::vector<NamedIdentity> ut3_z2_identities();

// "finest-reflection", "finest-symplectic" or "ut3-z2".
std::vector<NamedIdentity> identity_set(const std::string& name, int m);
// The algebra a named set refers to.
GradedStarAlgebra identity_set_algebra(const std::string& name, int m);

std::vector<Polynomial> polynomials(const std::vector<NamedIdentity>& ids);

} // namespace gradstar
