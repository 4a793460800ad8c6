#pragma once

#include "fkdeg/bounds.hpp"
#include "fkdeg/certificate.hpp"
#include "fkdeg/constructive.hpp"
#include "fkdeg/enumerate.hpp"
#include "fkdeg/errors.hpp"
#include "fkdeg/forest_dp.hpp"
#include "fkdeg/generators.hpp"
#include "fkdeg/graph.hpp"
#include "fkdeg/harness.hpp"
#include "fkdeg/oracle.hpp"
#include "fkdeg/order.hpp"
