#pragma once

#include "catalog.hpp"
#include "error.hpp"
#include "export.hpp"
#include "generators.hpp"
#include "hopf.hpp"
#include "prograph.hpp"
#include "series.hpp"
#include "stiff.hpp"
