#pragma once

#include "gk2/error.hpp"
#include "gk2/integer.hpp"
#include "gk2/semigroup.hpp"
#include "gk2/curve_params.hpp"
#include "gk2/gk2_semigroups.hpp"
#include "gk2/fengrao.hpp"
#include "gk2/quantum.hpp"
#include "gk2/reference.hpp"
#include "gk2/gf.hpp"
#include "gk2/curve.hpp"
