#ifndef SENSELIST_SENSELIST_HPP
#define SENSELIST_SENSELIST_HPP

// Umbrella header for the whole toolkit.

#include "senselist/agreement.hpp"
#include "senselist/corpus.hpp"
#include "senselist/decision_list.hpp"
#include "senselist/evaluation.hpp"
#include "senselist/features.hpp"
#include "senselist/io.hpp"
#include "senselist/rng.hpp"
#include "senselist/synth.hpp"

#endif  // SENSELIST_SENSELIST_HPP
