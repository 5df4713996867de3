#pragma once

#include "qsic/budget.hpp"
#include "qsic/combinat.hpp"
#include "qsic/cyclo.hpp"
#include "qsic/error.hpp"
#include "qsic/fraccolor.hpp"
#include "qsic/rational.hpp"
#include "qsic/rays.hpp"
#include "qsic/serialize.hpp"
#include "qsic/sicval.hpp"
#include "qsic/vertex_set.hpp"
#include "qsic/xgraph.hpp"
