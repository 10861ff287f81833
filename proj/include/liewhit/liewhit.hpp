#pragma once

// Umbrella header: the whole library.

#include "borel.hpp"
#include "catalog.hpp"
#include "character.hpp"
#include "ext.hpp"
#include "findim.hpp"
#include "ladder.hpp"
#include "linalg.hpp"
#include "pbw.hpp"
#include "presentation.hpp"
#include "presentation_io.hpp"
#include "scalar.hpp"
#include "structure.hpp"
#include "vk.hpp"
#include "whittaker.hpp"
#include "witt.hpp"
