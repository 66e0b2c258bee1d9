#pragma once

// Umbrella header: the positive part of quantum affine sl2 realized inside
// the q-shuffle algebra on two letters, with exact arithmetic throughout.

#include "catalan.hpp"
#include "element.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "numbers.hpp"
#include "parse.hpp"
#include "pbw.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "shuffle.hpp"
#include "text.hpp"
#include "verify.hpp"
#include "word.hpp"
