#pragma once

#include "cohlab/core.hpp"
#include "cohlab/errors.hpp"
#include "cohlab/majorization.hpp"
#include "cohlab/pulsesim.hpp"
#include "cohlab/quantifiers.hpp"
#include "cohlab/verify.hpp"
