#pragma once

#include "wallkit/rational.hpp"
#include "wallkit/chern.hpp"
#include "wallkit/conditions.hpp"
#include "wallkit/enumerate.hpp"
#include "wallkit/bounds.hpp"
#include "wallkit/plane.hpp"
#include "wallkit/catalog_io.hpp"
#include "wallkit/geometry.hpp"
