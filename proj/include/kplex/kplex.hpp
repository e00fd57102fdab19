#pragma once

#include "kplex/altrb.hpp"
#include "kplex/bounds.hpp"
#include "kplex/graph.hpp"
#include "kplex/heuristic.hpp"
#include "kplex/io.hpp"
#include "kplex/oracle.hpp"
#include "kplex/reduction.hpp"
#include "kplex/report.hpp"
#include "kplex/search.hpp"
#include "kplex/vertex_set.hpp"
