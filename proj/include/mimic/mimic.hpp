#pragma once

#include "mimic/constrained_cut.hpp"
#include "mimic/constrained_spec.hpp"
#include "mimic/graph.hpp"
#include "mimic/important_cuts.hpp"
#include "mimic/io.hpp"
#include "mimic/linkage.hpp"
#include "mimic/mincut.hpp"
#include "mimic/oracle.hpp"
#include "mimic/sndp.hpp"
#include "mimic/sndp_instance.hpp"
#include "mimic/tree_decomposition.hpp"
