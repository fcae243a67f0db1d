#pragma once

#include "hypertopo/colorings.hpp"
#include "hypertopo/core.hpp"
#include "hypertopo/generators.hpp"
#include "hypertopo/graph.hpp"
#include "hypertopo/groups.hpp"
#include "hypertopo/intersected.hpp"
#include "hypertopo/io.hpp"
#include "hypertopo/treeforest.hpp"
