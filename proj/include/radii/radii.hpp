#pragma once

// Umbrella header.

#include "radii/balanced.hpp"
#include "radii/ball.hpp"
#include "radii/body.hpp"
#include "radii/caratheodory.hpp"
#include "radii/checks.hpp"
#include "radii/circumradius.hpp"
#include "radii/equality.hpp"
#include "radii/errors.hpp"
#include "radii/explore.hpp"
#include "radii/gauge.hpp"
#include "radii/hpolytope.hpp"
#include "radii/io.hpp"
#include "radii/lp.hpp"
#include "radii/minimax.hpp"
#include "radii/report.hpp"
#include "radii/rng.hpp"
#include "radii/selection.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"
