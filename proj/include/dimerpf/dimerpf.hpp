#pragma once

#include "dimerpf/embedding.hpp"
#include "dimerpf/error.hpp"
#include "dimerpf/fixtures.hpp"
#include "dimerpf/fullmd.hpp"
#include "dimerpf/graphs.hpp"
#include "dimerpf/io.hpp"
#include "dimerpf/kasteleyn.hpp"
#include "dimerpf/oracle.hpp"
#include "dimerpf/partition.hpp"
#include "dimerpf/pfaffian.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/rational.hpp"
#include "dimerpf/reduce.hpp"
