#pragma once

#include "epglab/epg.hpp"
#include "epglab/error.hpp"
#include "epglab/finite_group.hpp"
#include "epglab/graph.hpp"
#include "epglab/group_spec.hpp"
#include "epglab/group_structure.hpp"
#include "epglab/labeling.hpp"
#include "epglab/number_theory.hpp"
#include "epglab/oracle.hpp"
#include "epglab/path_cover.hpp"
#include "epglab/random_graphs.hpp"
#include "epglab/theorem_suite.hpp"
#include "epglab/theorems.hpp"
