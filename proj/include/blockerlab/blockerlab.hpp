#pragma once

#include "blockerlab/blocker_bipartite.hpp"
#include "blockerlab/catalogue.hpp"
#include "blockerlab/classes.hpp"
#include "blockerlab/colouring.hpp"
#include "blockerlab/cotree.hpp"
#include "blockerlab/enumerate.hpp"
#include "blockerlab/errors.hpp"
#include "blockerlab/generators.hpp"
#include "blockerlab/graph.hpp"
#include "blockerlab/induced.hpp"
#include "blockerlab/instances.hpp"
#include "blockerlab/io.hpp"
#include "blockerlab/mono_edges.hpp"
#include "blockerlab/oracle.hpp"
#include "blockerlab/parameters.hpp"
#include "blockerlab/reductions.hpp"
#include "blockerlab/report.hpp"
