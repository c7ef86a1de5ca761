#ifndef MEDIANFORGE_MEDIANFORGE_HPP
#define MEDIANFORGE_MEDIANFORGE_HPP

#include "medianforge/cuts.hpp"
#include "medianforge/dual.hpp"
#include "medianforge/ends.hpp"
#include "medianforge/error.hpp"
#include "medianforge/geometry.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/index_set.hpp"
#include "medianforge/io.hpp"
#include "medianforge/pipeline.hpp"
#include "medianforge/pocset.hpp"
#include "medianforge/treeify.hpp"

#endif
