#pragma once

#include "oq/cpoly.hpp"
#include "oq/liealg.hpp"

namespace oq {

// Linear Poisson bracket on the dual: {f,g} = sum c_ij^k x_k df/dx_i dg/dx_j.
CPoly poisson_bracket(const LieAlgebraData& alg, const CPoly& f, const CPoly& g);

// Infinitesimal coadjoint action of basis element i: X_i.f = {x_i, f}.
CPoly coadjoint_action(const LieAlgebraData& alg, int i, const CPoly& f);

}  // namespace oq
