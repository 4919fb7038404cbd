#pragma once

#include <set>
#include <string>

#include "caseforge/argument.hpp"

namespace caseforge {

enum class RenderFormat {
    Dot,
    Markdown,
    Json,
};

std::optional<RenderFormat> render_format_from_name(const std::string& name);

struct RenderOptions {
    RenderFormat format = RenderFormat::Dot;
    std::set<std::string> highlight;
    bool show_lifecycle_lanes = false;
};

/// Renders a case for human consumption. DOT output follows GSN shape
/// conventions (goals as boxes, strategies as parallelograms, solutions as
/// circles, contexts as rounded boxes); undeveloped nodes carry a hollow
/// diamond marker. Node ordering is deterministic.
std::string render_case(const ArgumentGraph& graph, const RenderOptions& options);

} // namespace caseforge
