#include "tdesc/json_io.hpp"

namespace tdesc {

Json report_to_json(const Report& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json line{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) line["detail"] = c.detail;
        checks.push_back(line);
    }
    return Json{{"suite", report.title}, {"pass", report.pass()}, {"checks", checks}};
}

} // namespace tdesc
