#pragma once

#include "qbound/bounds.hpp"
#include "qbound/digraph.hpp"
#include "qbound/edge_list.hpp"
#include "qbound/generators.hpp"
#include "qbound/report.hpp"
#include "qbound/spectral.hpp"
#include "qbound/verify.hpp"
