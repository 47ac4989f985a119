#pragma once

#include "frobkit/algebra.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/fields.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/io.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/prime_field.hpp"
#include "frobkit/rational.hpp"
#include "frobkit/separability.hpp"
#include "frobkit/zoo.hpp"
