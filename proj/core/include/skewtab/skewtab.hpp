#pragma once

#include "skewtab/errors.hpp"
#include "skewtab/io.hpp"
#include "skewtab/lattice.hpp"
#include "skewtab/orthogonal.hpp"
#include "skewtab/rational.hpp"
#include "skewtab/repdiag.hpp"
#include "skewtab/schur.hpp"
#include "skewtab/shapes.hpp"
#include "skewtab/tableaux.hpp"
#include "skewtab/weights.hpp"
#include "skewtab/sweep.hpp"
