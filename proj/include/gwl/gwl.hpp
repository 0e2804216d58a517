#pragma once

#include "gwl/mat.hpp"
#include "gwl/measures.hpp"
#include "gwl/oracle.hpp"
#include "gwl/states.hpp"
