#pragma once

#include "bruhat/cartan.hpp"
#include "bruhat/error.hpp"
#include "bruhat/group.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/minors.hpp"
#include "bruhat/orbits.hpp"
#include "bruhat/rational.hpp"
#include "bruhat/sigma.hpp"
#include "bruhat/table.hpp"
#include "bruhat/verify.hpp"
#include "bruhat/weyl.hpp"
