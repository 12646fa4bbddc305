#pragma once

#include "heawood/certificates.hpp"
#include "heawood/dihedral.hpp"
#include "heawood/error.hpp"
#include "heawood/graph.hpp"
#include "heawood/iso_type.hpp"
#include "heawood/labeling.hpp"
#include "heawood/perm.hpp"
#include "heawood/perm_group.hpp"
#include "heawood/subgroups.hpp"
#include "heawood/symmetry.hpp"
