#pragma once

#include "origami/action.hpp"
#include "origami/bigint.hpp"
#include "origami/bsgs.hpp"
#include "origami/congruence.hpp"
#include "origami/error.hpp"
#include "origami/families.hpp"
#include "origami/origami.hpp"
#include "origami/perm.hpp"
#include "origami/report.hpp"
#include "origami/sl2.hpp"
#include "origami/veech.hpp"
#include "origami/weierstrass.hpp"
