#pragma once

#include "zeroloc/bench.hpp"
#include "zeroloc/companion.hpp"
#include "zeroloc/json_io.hpp"
#include "zeroloc/localize.hpp"
#include "zeroloc/mat2.hpp"
#include "zeroloc/oracle.hpp"
#include "zeroloc/poly.hpp"
#include "zeroloc/realroots.hpp"
#include "zeroloc/regions.hpp"
#include "zeroloc/rng.hpp"
#include "zeroloc/svg.hpp"
