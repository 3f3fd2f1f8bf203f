// Copyright 2026 The catrobot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "catrobot/trace.hpp"

namespace catrobot {

// Channel names accepted by the plotter. Each channel renders one panel of
// trace series against time, desired trajectories dashed.
std::vector<std::string> plot_channels();

// Static SVG of the selected channels. Throws ChannelError for unknown
// channel names (the message lists the valid ones) and IoError on write
// failure.
std::string render_svg(const RunTrace& trace,
                       const std::vector<std::string>& channels);
void write_svg(const RunTrace& trace, const std::vector<std::string>& channels,
               const std::string& path);

}  // namespace catrobot
