#pragma once

#include "guidepost/generators.hpp"

namespace testgen = guidepost::gen;
