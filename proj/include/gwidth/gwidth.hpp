#pragma once

#include "circle_action.hpp"
#include "error.hpp"
#include "grassmannian.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "polytope.hpp"
#include "rational.hpp"
#include "seidel.hpp"
#include "toric.hpp"
