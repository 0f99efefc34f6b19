#pragma once

#include "polaris/errors.hpp"
#include "polaris/kernel.hpp"
#include "polaris/quadrature.hpp"
#include "polaris/continuation.hpp"
#include "polaris/observables.hpp"
#include "polaris/ode_oracle.hpp"
#include "polaris/tables.hpp"
#include "polaris/scan.hpp"
