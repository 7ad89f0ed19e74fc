#pragma once

#include "avoidance.hpp"
#include "codec.hpp"
#include "genseq.hpp"
#include "index.hpp"
#include "regularities.hpp"
#include "subseq.hpp"
#include "suffix_array.hpp"
#include "word.hpp"
