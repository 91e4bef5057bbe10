#pragma once

#include "catalan_zeta/dyck.hpp"
#include "catalan_zeta/errors.hpp"
#include "catalan_zeta/pipeline.hpp"
#include "catalan_zeta/trees.hpp"
#include "catalan_zeta/verify.hpp"
#include "catalan_zeta/words.hpp"
#include "catalan_zeta/zeta.hpp"
