#pragma once

#include "ghzsim/darkstate.hpp"
#include "ghzsim/observables.hpp"
#include "ghzsim/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ghzsim {

// %.12g with the C locale regardless of global locale settings.
std::string format_number(double value);

// Header: t,P_1,P_3,...,P_{4N-1},P_excited_total,P_fiber_total,fidelity,norm_or_trace.
// Comment lines are emitted first, each prefixed with "# ".
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows, int n_atoms,
                     const std::vector<std::string>& comments);

// Header: t,X,G,c1_sq,c3_sq,...,c{4N-1}_sq,gap.
void write_dark_csv(std::ostream& out, const std::vector<DarkTraceRow>& rows, int n_atoms,
                    const std::vector<std::string>& comments);

// Header: x_name,y_name,x,y,fidelity.  No comments; metadata travels in the
// companion JSON file.  Failed points carry nan.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

void write_text_file(const std::string& path, const std::string& content);

} // namespace ghzsim
