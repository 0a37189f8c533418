#pragma once

#include "schubert/compat.hpp"
#include "schubert/error.hpp"
#include "schubert/ladder.hpp"
#include "schubert/lattice.hpp"
#include "schubert/numeric.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/quasipoly.hpp"
#include "schubert/schubert.hpp"
#include "schubert/serialize.hpp"
#include "schubert/triple.hpp"
