#pragma once

// Umbrella header.

#include "abelsub/error.hpp"
#include "abelsub/numeric.hpp"
#include "abelsub/word.hpp"
#include "abelsub/sturmian.hpp"
#include "abelsub/standard_pair.hpp"
#include "abelsub/morphism.hpp"
#include "abelsub/flipping.hpp"
#include "abelsub/word_spec.hpp"
#include "abelsub/abelian.hpp"
#include "abelsub/transforms.hpp"
#include "abelsub/structure.hpp"
#include "abelsub/family.hpp"
#include "abelsub/report.hpp"
#include "abelsub/suites.hpp"
