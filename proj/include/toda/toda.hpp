#pragma once

#include "applications.hpp"
#include "bernstein.hpp"
#include "content.hpp"
#include "hierarchy.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "rational.hpp"
#include "reconstruct.hpp"
#include "serialize.hpp"
#include "series.hpp"
#include "specialize.hpp"
#include "truncated_poly.hpp"
#include "ymonomial.hpp"
