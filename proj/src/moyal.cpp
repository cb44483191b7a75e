#include "magweyl/types.hpp"
