#pragma once

#include "ordcalc/integer.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/fincode.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/euclid.hpp"
#include "ordcalc/numerosity.hpp"
#include "ordcalc/psexpr.hpp"
#include "ordcalc/partition.hpp"
#include "ordcalc/parse.hpp"
