#ifndef FLAGDECK_FLAGDECK_HPP
#define FLAGDECK_FLAGDECK_HPP

#include "error.hpp"
#include "face.hpp"
#include "polynomial.hpp"
#include "complex.hpp"
#include "exact_rank.hpp"
#include "parallel.hpp"
#include "homology.hpp"
#include "transforms.hpp"
#include "kruskal_katona.hpp"
#include "attach.hpp"
#include "boolean.hpp"
#include "gamma.hpp"
#include "tower.hpp"
#include "io.hpp"
#include "cli.hpp"

#endif
