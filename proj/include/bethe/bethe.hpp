#pragma once

// Umbrella header for the open-chain Bethe ansatz library.

#include "bethe/types.hpp"
#include "bethe/params.hpp"
#include "bethe/functions.hpp"
#include "bethe/linalg.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/kmatrix.hpp"
#include "bethe/double_row.hpp"
#include "bethe/hamiltonian.hpp"
#include "bethe/roots.hpp"
#include "bethe/eigenvalues.hpp"
#include "bethe/states.hpp"
#include "bethe/sampling.hpp"
#include "bethe/solver.hpp"
#include "bethe/report.hpp"
#include "bethe/suites.hpp"
