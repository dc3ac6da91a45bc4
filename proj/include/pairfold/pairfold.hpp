#pragma once

// Convenience header pulling in the whole library.

#include "pairfold/check.hpp"
#include "pairfold/codec.hpp"
#include "pairfold/enumeration.hpp"
#include "pairfold/error.hpp"
#include "pairfold/integer.hpp"
#include "pairfold/pairing.hpp"
#include "pairfold/table.hpp"
