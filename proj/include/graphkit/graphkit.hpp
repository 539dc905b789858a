#pragma once

#include "graphkit/accessors.hpp"
#include "graphkit/adj_list_graph.hpp"
#include "graphkit/algorithms/dijkstra.hpp"
#include "graphkit/algorithms/scc.hpp"
#include "graphkit/algorithms/search.hpp"
#include "graphkit/algorithms/topo_sort.hpp"
#include "graphkit/aux_structures.hpp"
#include "graphkit/compact_graph.hpp"
#include "graphkit/complete_graph.hpp"
#include "graphkit/contraction.hpp"
#include "graphkit/edge_list.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/generator.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"
#include "graphkit/matching.hpp"
#include "graphkit/safe_graph.hpp"
#include "graphkit/trace.hpp"
#include "graphkit/wrappers.hpp"
