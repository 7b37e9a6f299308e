#pragma once

#include "census.hpp"
#include "ext_field.hpp"
#include "ff_core.hpp"
#include "lfsr.hpp"
#include "matforms.hpp"
#include "report.hpp"
