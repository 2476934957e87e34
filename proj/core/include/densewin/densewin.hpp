#pragma once

#include "densewin/evalkit.hpp"
#include "densewin/miner.hpp"
#include "densewin/occ.hpp"
#include "densewin/oracle.hpp"
#include "densewin/region.hpp"
#include "densewin/result_io.hpp"
#include "densewin/scan.hpp"
#include "densewin/synthgen.hpp"
#include "densewin/transaction_db.hpp"
#include "densewin/types.hpp"
