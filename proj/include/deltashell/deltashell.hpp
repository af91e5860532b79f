#pragma once

// Umbrella header: scattering data for 3D Schroedinger operators with
// finitely many concentric delta-shell interactions.

#include "boundary.hpp"
#include "cmatrix.hpp"
#include "doubleshell.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "smatrix.hpp"
#include "specfun.hpp"
#include "spectral.hpp"
