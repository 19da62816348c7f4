#ifndef YTWO_YTWO_HPP
#define YTWO_YTWO_HPP

#include "ytwo/error.hpp"
#include "ytwo/laurent.hpp"
#include "ytwo/qe_scalar.hpp"
#include "ytwo/finite_field.hpp"
#include "ytwo/eval_map.hpp"
#include "ytwo/matrix.hpp"
#include "ytwo/ffmatrix.hpp"
#include "ytwo/quadspace.hpp"
#include "ytwo/presentation.hpp"
#include "ytwo/ortho_rep.hpp"
#include "ytwo/clifford.hpp"
#include "ytwo/sidki_rep.hpp"
#include "ytwo/spectool.hpp"

#endif  // YTWO_YTWO_HPP
