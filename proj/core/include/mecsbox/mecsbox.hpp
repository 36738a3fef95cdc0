#pragma once

#include "mecsbox/boolcrypt.hpp"
#include "mecsbox/curve.hpp"
#include "mecsbox/error.hpp"
#include "mecsbox/gf256.hpp"
#include "mecsbox/modmath.hpp"
#include "mecsbox/ordering.hpp"
#include "mecsbox/report.hpp"
#include "mecsbox/sbox.hpp"
#include "mecsbox/sbox_io.hpp"
#include "mecsbox/stats.hpp"
