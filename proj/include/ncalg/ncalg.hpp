#pragma once

// Exact-arithmetic toolkit for subalgebra membership of noncommutative
// polynomials: free-algebra arithmetic, truncated Fock spaces, joint
// invariant subspaces, membership deciders with verifiable certificates,
// and non-membership witnesses.

#include "ncalg/fock.hpp"
#include "ncalg/invariant.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/membership.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/poly.hpp"
#include "ncalg/rational.hpp"
#include "ncalg/witness.hpp"
#include "ncalg/word.hpp"
