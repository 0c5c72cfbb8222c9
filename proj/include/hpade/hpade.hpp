#pragma once

#include "hpade/error.hpp"
#include "hpade/scalar.hpp"
#include "hpade/polynomial.hpp"
#include "hpade/power_series.hpp"
#include "hpade/residual.hpp"
#include "hpade/linalg.hpp"
#include "hpade/pade.hpp"
#include "hpade/hermite_pade.hpp"
#include "hpade/roots.hpp"
#include "hpade/trig_polynomial.hpp"
#include "hpade/vdp.hpp"
#include "hpade/models.hpp"
#include "hpade/potential.hpp"
#include "hpade/analysis.hpp"
