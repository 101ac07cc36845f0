#pragma once

/// Umbrella header.

#include "finspec/construct.hpp"
#include "finspec/corpus.hpp"
#include "finspec/errors.hpp"
#include "finspec/expr.hpp"
#include "finspec/hom.hpp"
#include "finspec/hom_search.hpp"
#include "finspec/ideal.hpp"
#include "finspec/pointwise.hpp"
#include "finspec/poset.hpp"
#include "finspec/quotients.hpp"
#include "finspec/regular.hpp"
#include "finspec/report_io.hpp"
#include "finspec/ring.hpp"
#include "finspec/spectral_topologies.hpp"
#include "finspec/spectrum.hpp"
#include "finspec/theorems.hpp"
#include "finspec/topology.hpp"
