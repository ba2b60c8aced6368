#pragma once

#include <string>

#include "spectree/campaign.hpp"

namespace spectree {

struct ReportFormat {
  bool timing = true;  // include elapsed_ms
};

/// {campaign, params, rows[], checks[], elapsed_ms}
Json to_json(const CampaignReport& r, const ReportFormat& fmt = {});
std::string to_json_text(const CampaignReport& r, const ReportFormat& fmt = {});
/// Rows as CSV (columns in first-seen key order), then a check table.
std::string to_csv(const CampaignReport& r, const ReportFormat& fmt = {});
/// Aligned plain-text table plus PASS/FAIL lines.
std::string to_text(const CampaignReport& r, const ReportFormat& fmt = {});

}  // namespace spectree
