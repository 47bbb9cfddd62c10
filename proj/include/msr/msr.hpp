#pragma once

#include "msr/error.hpp"
#include "msr/graph.hpp"
#include "msr/graph_io.hpp"
#include "msr/harness.hpp"
#include "msr/instance.hpp"
#include "msr/instance_io.hpp"
#include "msr/params.hpp"
#include "msr/reductions.hpp"
#include "msr/reductions_io.hpp"
#include "msr/solvers.hpp"
