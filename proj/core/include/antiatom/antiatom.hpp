#pragma once

#include "antiatom/catalog.hpp"
#include "antiatom/enumeration.hpp"
#include "antiatom/error.hpp"
#include "antiatom/numerical_set.hpp"
#include "antiatom/partitions.hpp"
#include "antiatom/pf_structure.hpp"
#include "antiatom/semigroup.hpp"
#include "antiatom/void_poset.hpp"
