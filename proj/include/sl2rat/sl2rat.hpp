#pragma once

#include "error.hpp"
#include "extension.hpp"
#include "hyper.hpp"
#include "io.hpp"
#include "k0.hpp"
#include "monoidal.hpp"
#include "parse.hpp"
#include "picard.hpp"
#include "rep.hpp"
#include "semilinear.hpp"
#include "shift.hpp"
