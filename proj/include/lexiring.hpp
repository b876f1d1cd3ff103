#pragma once

#include "lexiring/core.hpp"
#include "lexiring/rational.hpp"
#include "lexiring/ring.hpp"
#include "lexiring/lattice.hpp"
#include "lexiring/order.hpp"
#include "lexiring/vector.hpp"
#include "lexiring/lexspace.hpp"
#include "lexiring/code.hpp"
#include "lexiring/weight.hpp"
#include "lexiring/property.hpp"
#include "lexiring/greedy.hpp"
#include "lexiring/oracle.hpp"
#include "lexiring/config.hpp"
#include "lexiring/report.hpp"
#include "lexiring/registry.hpp"
