#pragma once

#include "spinchain/analysis.hpp"
#include "spinchain/chain.hpp"
#include "spinchain/channel.hpp"
#include "spinchain/correlations.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/figures.hpp"
#include "spinchain/io.hpp"
#include "spinchain/linalg.hpp"
#include "spinchain/selftest.hpp"
#include "spinchain/states.hpp"
#include "spinchain/version.hpp"
