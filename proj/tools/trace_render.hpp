// Renders solve diagnostics (--trace) as text. Works entirely through the
// public C API so the CLI never links the solver internals.

#ifndef DLOGFP_TOOLS_TRACE_RENDER_HPP
#define DLOGFP_TOOLS_TRACE_RENDER_HPP

#include <string>

#include "dlogfp.h"

namespace dlogfp_cli {

std::string render_trace(const dlogfp_ctx* ctx, const dlogfp_trace* trace,
                         dlogfp_method method);

} // namespace dlogfp_cli

#endif
