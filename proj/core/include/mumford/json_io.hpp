#pragma once

#include <string>

#include "mumford/integrate.hpp"
#include "mumford/phase_space.hpp"

namespace mumford {

/// JSON encoding of phase points. Exact rationals are "p/q" strings, floats
/// plain numbers; coefficient arrays are in subscript order.
template <class S>
std::string point_to_json(const MumfordLikePoint<S>& p);
template <class S>
std::string point_to_json(const DLaxPoint<S>& p);
template <class S>
std::string point_to_json(const NYState<S>& p);

template <class S>
MumfordLikePoint<S> mumford_like_from_json(const std::string& text);
template <class S>
DLaxPoint<S> dlax_from_json(const std::string& text);
template <class S>
NYState<S> ny_from_json(const std::string& text);

Family family_of_json(const std::string& text);

}  // namespace mumford
