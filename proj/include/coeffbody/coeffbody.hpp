#pragma once

#include "coeffbody/bell.hpp"
#include "coeffbody/bounds.hpp"
#include "coeffbody/error.hpp"
#include "coeffbody/families.hpp"
#include "coeffbody/io.hpp"
#include "coeffbody/reversion.hpp"
#include "coeffbody/schur.hpp"
#include "coeffbody/series.hpp"
#include "coeffbody/verify.hpp"
