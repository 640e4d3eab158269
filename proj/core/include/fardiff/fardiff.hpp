#pragma once

#include "fardiff/dataset.hpp"
#include "fardiff/diffusion.hpp"
#include "fardiff/error.hpp"
#include "fardiff/fuzzyart.hpp"
#include "fardiff/metrics.hpp"
#include "fardiff/pipeline.hpp"
#include "fardiff/serialize.hpp"
