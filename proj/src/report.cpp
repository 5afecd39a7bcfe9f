#include "pinperm/report.hpp"

#include <json.hpp>

namespace pinperm {

std::string report_text(const FinitenessReport& report, bool include_witness) {
    std::string out;
    out += "proper pin-permutations:  ";
    out += verdict_name(report.pins.verdict);
    out += '\n';
    out += "parallel alternations:    ";
    out += verdict_name(report.alternations.verdict);
    out += '\n';
    out += "wedge simple, type 1:     ";
    out += verdict_name(report.wedge1.verdict);
    out += '\n';
    out += "wedge simple, type 2:     ";
    out += verdict_name(report.wedge2.verdict);
    out += '\n';
    out += "overall:                  ";
    out += verdict_name(report.overall);
    out += '\n';
    if (!report.special_case.empty())
        out += "note: " + report.special_case + "\n";
    if (include_witness) {
        if (report.pins.witness) {
            const Lasso& lasso = *report.pins.witness;
            out += "pin witness: (" + lasso.prefix + ")(" + lasso.cycle + ")^k";
            if (!lasso.suffix.empty())
                out += "(" + lasso.suffix + ")";
            out += '\n';
        }
        auto symmetry_line = [&out](const char* what, const SymmetryDecision& d) {
            if (d.failing_symmetry)
                out += std::string(what) + " witness: no basis element lies in the " +
                       symmetry_name(*d.failing_symmetry) + " symmetry of the avoidance class\n";
        };
        symmetry_line("alternation", report.alternations);
        symmetry_line("wedge-1", report.wedge1);
        symmetry_line("wedge-2", report.wedge2);
    }
    return out;
}

std::string report_json(const FinitenessReport& report) {
    nlohmann::json witnesses;
    witnesses["pin_lasso"] = nullptr;
    if (report.pins.witness) {
        const Lasso& lasso = *report.pins.witness;
        witnesses["pin_lasso"] = {
            {"prefix", lasso.prefix}, {"cycle", lasso.cycle}, {"suffix", lasso.suffix}};
    }
    auto symmetry_field = [](const SymmetryDecision& d) -> nlohmann::json {
        if (d.failing_symmetry)
            return symmetry_name(*d.failing_symmetry);
        return nullptr;
    };
    witnesses["alternations_symmetry"] = symmetry_field(report.alternations);
    witnesses["wedge1_symmetry"] = symmetry_field(report.wedge1);
    witnesses["wedge2_symmetry"] = symmetry_field(report.wedge2);
    witnesses["special_case"] =
        report.special_case.empty() ? nlohmann::json(nullptr) : nlohmann::json(report.special_case);

    nlohmann::json j{
        {"pin", verdict_name(report.pins.verdict)},
        {"alternations", verdict_name(report.alternations.verdict)},
        {"wedge1", verdict_name(report.wedge1.verdict)},
        {"wedge2", verdict_name(report.wedge2.verdict)},
        {"overall", verdict_name(report.overall)},
        {"witnesses", witnesses},
        {"timings",
         {{"pin_ms", report.timings.pin_ms},
          {"alternations_ms", report.timings.alternations_ms},
          {"wedge1_ms", report.timings.wedge1_ms},
          {"wedge2_ms", report.timings.wedge2_ms}}},
    };
    return j.dump(2) + "\n";
}

} // namespace pinperm
