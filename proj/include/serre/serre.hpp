#pragma once

#include "arith.hpp"
#include "brauer.hpp"
#include "consistency.hpp"
#include "format.hpp"
#include "gl2reps.hpp"
#include "glnweights.hpp"
#include "ledger.hpp"
#include "localgalois.hpp"
#include "pbt.hpp"
#include "sympair.hpp"
#include "tametypes.hpp"
