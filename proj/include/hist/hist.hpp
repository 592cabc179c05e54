#pragma once

#include "hist/errors.hpp"
#include "hist/graph.hpp"
#include "hist/graph6.hpp"
#include "hist/spectral.hpp"
#include "hist/hist_search.hpp"
#include "hist/proof_guided.hpp"
#include "hist/enumeration.hpp"
#include "hist/report.hpp"
