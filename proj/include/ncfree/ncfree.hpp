#pragma once

#include "errors.hpp"
#include "scalar.hpp"
#include "word.hpp"
#include "nc_lattice.hpp"
#include "series.hpp"
#include "freeprob/distribution.hpp"
#include "freeprob/transforms.hpp"
#include "freeprob/named.hpp"
#include "freeprob/oracle.hpp"
#include "freeprob/s_transform.hpp"
#include "freeprob/applications.hpp"
#include "json_io.hpp"
