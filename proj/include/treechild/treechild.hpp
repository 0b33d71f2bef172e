#pragma once

// Umbrella header for the tree-child network toolkit.

#include "airy.hpp"
#include "asymptotics.hpp"
#include "certificates.hpp"
#include "closed_forms.hpp"
#include "enumerate.hpp"
#include "interval.hpp"
#include "network.hpp"
#include "rationals.hpp"
#include "recurrences.hpp"
#include "words.hpp"
