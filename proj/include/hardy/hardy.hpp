#pragma once

#include "hardy/constants.hpp"
#include "hardy/errors.hpp"
#include "hardy/graph.hpp"
#include "hardy/inequalities.hpp"
#include "hardy/io.hpp"
#include "hardy/lattice.hpp"
#include "hardy/lorentz.hpp"
#include "hardy/minimize.hpp"
#include "hardy/params.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/radial.hpp"
#include "hardy/special.hpp"
