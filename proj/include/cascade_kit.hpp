#pragma once

#include "cascade_kit/rational.hpp"
#include "cascade_kit/errors.hpp"
#include "cascade_kit/linalg.hpp"
#include "cascade_kit/root_system.hpp"
#include "cascade_kit/dynkin.hpp"
#include "cascade_kit/cascade.hpp"
#include "cascade_kit/cascade_element.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "cascade_kit/classical_model.hpp"
#include "cascade_kit/involution.hpp"
#include "cascade_kit/orbit.hpp"
#include "cascade_kit/fixtures.hpp"
#include "cascade_kit/verify.hpp"
#include "cascade_kit/report.hpp"
#include "cascade_kit/tables.hpp"
