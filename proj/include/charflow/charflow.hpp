#pragma once

// Umbrella header.

#include "charflow/character.hpp"
#include "charflow/ergodic.hpp"
#include "charflow/errors.hpp"
#include "charflow/fricke.hpp"
#include "charflow/geometry.hpp"
#include "charflow/group.hpp"
#include "charflow/io.hpp"
#include "charflow/kernels.hpp"
#include "charflow/numeric.hpp"
#include "charflow/oracle.hpp"
#include "charflow/reduction.hpp"
#include "charflow/sampling.hpp"
