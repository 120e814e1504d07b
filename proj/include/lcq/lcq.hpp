#pragma once

#include "lcq/abelian_group.hpp"
#include "lcq/catalog.hpp"
#include "lcq/error.hpp"
#include "lcq/exterior.hpp"
#include "lcq/fano.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/io.hpp"
#include "lcq/lattice.hpp"
#include "lcq/nilpotent.hpp"
#include "lcq/report.hpp"
#include "lcq/second_quotient.hpp"
