#pragma once

#include "hquat/dyadic.hpp"
#include "hquat/error.hpp"
#include "hquat/euclid.hpp"
#include "hquat/integer.hpp"
#include "hquat/modm.hpp"
#include "hquat/prime_factor.hpp"
#include "hquat/quat.hpp"
#include "hquat/rep_count.hpp"
#include "hquat/text.hpp"
