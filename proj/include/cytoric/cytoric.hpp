#pragma once

#include "arith.hpp"
#include "chow.hpp"
#include "classify.hpp"
#include "cone.hpp"
#include "coneconj.hpp"
#include "divisor.hpp"
#include "fan.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "polytope.hpp"
