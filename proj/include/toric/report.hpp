#pragma once

#include <string>

#include "toric/analysis.hpp"

namespace toric {

enum class ReportFormat { Human, Machine };

// Machine format is line-oriented "key = value" with a fixed, documented key
// order (see README). Human format is sectioned prose with the inequalities
// spelled out.
struct RenderedReport {
  ReportFormat format = ReportFormat::Human;
  std::string body;
};

RenderedReport render_report(const AnalysisReport& report, ReportFormat format);

RenderedReport render_validation(const std::string& name, const ValidationReport& report,
                                 ReportFormat format);
RenderedReport render_collections(const AnalysisReport& report, ReportFormat format);
RenderedReport render_components(const AnalysisReport& report, ReportFormat format);
RenderedReport render_bounds(const AnalysisReport& report, ReportFormat format);
RenderedReport render_conjecture(const AnalysisReport& report, ReportFormat format);
RenderedReport render_classification(const AnalysisReport& report, ReportFormat format);

}  // namespace toric
