#pragma once

#include "degdiv/clustering.hpp"
#include "degdiv/collision.hpp"
#include "degdiv/constructions.hpp"
#include "degdiv/degree_diversity.hpp"
#include "degdiv/errors.hpp"
#include "degdiv/graph.hpp"
#include "degdiv/harness.hpp"
#include "degdiv/homogeneous.hpp"
#include "degdiv/io.hpp"
#include "degdiv/rational.hpp"
#include "degdiv/rng.hpp"
