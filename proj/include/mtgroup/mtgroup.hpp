#pragma once

#include "mtgroup/errors.hpp"
#include "mtgroup/hodge.hpp"
#include "mtgroup/int_matrix.hpp"
#include "mtgroup/integer.hpp"
#include "mtgroup/lifting.hpp"
#include "mtgroup/polarizable.hpp"
#include "mtgroup/real_form.hpp"
#include "mtgroup/root_system.hpp"
#include "mtgroup/serre_center.hpp"
#include "mtgroup/verdict.hpp"
