#pragma once

// Umbrella header: the whole workbench.

#include "corel/rational.hpp"
#include "corel/matrix.hpp"
#include "corel/subspace.hpp"
#include "corel/validation.hpp"
#include "corel/coalgebra.hpp"
#include "corel/bicomodule.hpp"
#include "corel/relation.hpp"
#include "corel/quotient.hpp"
#include "corel/setrel.hpp"
#include "corel/dsl.hpp"
