#pragma once

#include "qgauge/airy.hpp"
#include "qgauge/analytic_field.hpp"
#include "qgauge/errors.hpp"
#include "qgauge/gauge.hpp"
#include "qgauge/grid.hpp"
#include "qgauge/hamiltonian.hpp"
#include "qgauge/interpolation.hpp"
#include "qgauge/params.hpp"
#include "qgauge/propagator.hpp"
#include "qgauge/residual.hpp"
#include "qgauge/residual_report.hpp"
#include "qgauge/solutions.hpp"
#include "qgauge/trajectory.hpp"
#include "qgauge/transforms.hpp"
#include "qgauge/tridiagonal.hpp"
#include "qgauge/wave_field.hpp"
