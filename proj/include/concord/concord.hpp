#pragma once
// Umbrella header.

#include "concord/braid.hpp"
#include "concord/catalog.hpp"
#include "concord/circle_angle.hpp"
#include "concord/cyclo_sign.hpp"
#include "concord/dyadic.hpp"
#include "concord/errors.hpp"
#include "concord/genus1.hpp"
#include "concord/hermitian.hpp"
#include "concord/independence.hpp"
#include "concord/instanton.hpp"
#include "concord/int_matrix.hpp"
#include "concord/io.hpp"
#include "concord/jumps.hpp"
#include "concord/laurent.hpp"
#include "concord/poly.hpp"
#include "concord/rational.hpp"
#include "concord/seifert.hpp"
#include "concord/surgery.hpp"
