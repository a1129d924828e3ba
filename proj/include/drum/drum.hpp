#pragma once

// Umbrella header: connection Laplacians, Green functions, Dirac and Hodge
// operators of finite abstract simplicial complexes, and the spectral
// recovery of their topology.

#include "drum/complex.hpp"
#include "drum/error.hpp"
#include "drum/exact/charpoly.hpp"
#include "drum/exact/elimination.hpp"
#include "drum/exact/inertia.hpp"
#include "drum/exact/jacobi.hpp"
#include "drum/exact/matrix.hpp"
#include "drum/exact/polynomial.hpp"
#include "drum/hearing.hpp"
#include "drum/io.hpp"
#include "drum/operators.hpp"
#include "drum/random.hpp"
#include "drum/refine.hpp"
#include "drum/report.hpp"
#include "drum/simplex.hpp"
