#pragma once

#include "patternforge/construction.hpp"
#include "patternforge/error.hpp"
#include "patternforge/levels.hpp"
#include "patternforge/marked_word.hpp"
#include "patternforge/oracle.hpp"
#include "patternforge/succession.hpp"
#include "patternforge/word.hpp"
