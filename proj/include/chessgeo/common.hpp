#pragma once

#include <Eigen/Core>
#include <vector>

namespace chessgeo {

using Point = Eigen::Vector2d;
using Polyline = std::vector<Point>;

}  // namespace chessgeo
