#include "ckd3/report_json.hpp"

#include <json.hpp>

namespace ckd3 {

std::string report_json(const CheckTable& t, const std::vector<DetectionReport>& reports) {
    nlohmann::ordered_json doc;
    doc["table_name"] = t.name();
    doc["base"] = t.base();
    doc["classes"] = nlohmann::ordered_json::array();
    for (const DetectionReport& rep : reports) {
        nlohmann::ordered_json entry;
        entry["class"] = error_class_name(rep.error_class);
        entry["pair_count"] = rep.pair_count();
        auto pairs = nlohmann::ordered_json::array();
        for (const WordPair& p : rep.undetected)
            pairs.push_back({{p.a.d1, p.a.d2, p.a.d3}, {p.b.d1, p.b.d2, p.b.d3}});
        entry["undetected"] = std::move(pairs);
        if (rep.structural_equivalent_passed.has_value())
            entry["structural_equivalent_passed"] = *rep.structural_equivalent_passed;
        else
            entry["structural_equivalent_passed"] = nullptr;
        doc["classes"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace ckd3
