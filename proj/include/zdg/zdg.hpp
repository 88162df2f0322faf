// zdg - zero-divisor graphs of finite commutative semigroups
//
// Umbrella header. json.hpp is left out because it needs nlohmann/json on
// the include path.

#ifndef ZDG_ZDG_HPP_
#define ZDG_ZDG_HPP_

#include "boolean_algebra.hpp"
#include "boolean_ring.hpp"
#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "realize.hpp"
#include "semigroup.hpp"
#include "semigroup_io.hpp"
#include "small_set.hpp"
#include "theorems.hpp"

#endif  // ZDG_ZDG_HPP_
