#ifndef WID_REPORT_HPP
#define WID_REPORT_HPP

#include <wid/expr.hpp>
#include <wid/pairs.hpp>
#include <wid/structure.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace wid {

using nlohmann::json;

/*
 * Result of one CLI invocation.  The machine format is a single JSON object
 * with exactly these fields; from_json(to_json(r)) == r.
 */
struct Report {
    std::string command;
    json inputs = json::object();
    std::string status;  // "holds", "fails", "ok", "error"
    json outcome = json::object();
    double elapsed_ms = 0.0;
    std::vector<unsigned> seeds;

    friend bool operator==(const Report&, const Report&) = default;
};

inline void to_json(json& j, const Report& r)
{
    j = json{{"command", r.command}, {"inputs", r.inputs},         {"status", r.status},
             {"outcome", r.outcome}, {"elapsed_ms", r.elapsed_ms}, {"seeds", r.seeds}};
}

inline void from_json(const json& j, Report& r)
{
    j.at("command").get_to(r.command);
    r.inputs = j.at("inputs");
    j.at("status").get_to(r.status);
    r.outcome = j.at("outcome");
    j.at("elapsed_ms").get_to(r.elapsed_ms);
    j.at("seeds").get_to(r.seeds);
}

inline json rank_report_json(const RankReport& r)
{
    return json{{"kind", r.kind},
                {"degree", r.degree},
                {"target", r.target},
                {"rows", r.rows},
                {"cols", r.cols},
                {"distinct_cols", r.distinct_cols},
                {"rank", r.rank},
                {"kernel_dim", r.kernel_dim},
                {"quotient_dim", r.quotient_dim},
                {"seeds", r.seeds},
                {"seed_ranks", r.seed_ranks},
                {"exact", r.exact}};
}

inline json witness_json(const Witness& w)
{
    json assignment = json::object();
    std::string shown;
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
        assignment[Naming::name(w.generators[i])] = w.labels[i];
        shown += (i ? ", " : "") + Naming::name(w.generators[i]) + "→" + w.labels[i];
    }
    return json{{"polynomial", format_expr(w.polynomial)},
                {"assignment", assignment},
                {"substitution", shown},
                {"value", value_str(w.value)}};
}

/// Aligned "key  value" listing of a JSON object, nested objects indented.
inline void render_text(std::ostream& os, const json& j, int indent = 0)
{
    std::size_t width = 0;
    for (const auto& [k, v] : j.items())
        width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
        os << std::string(static_cast<std::size_t>(indent), ' ') << k;
        if (v.is_object()) {
            os << ":\n";
            render_text(os, v, indent + 2);
            continue;
        }
        os << std::string(width - k.size() + 2, ' ');
        if (v.is_string())
            os << v.get<std::string>();
        else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); })
                 && !v.empty()) {
            os << "\n";
            for (const auto& e : v) {
                os << std::string(static_cast<std::size_t>(indent) + 2, ' ') << "-";
                bool first = true;
                for (const auto& [ek, ev] : e.items()) {
                    os << (first ? " " : ", ") << ek << "=" << (ev.is_string() ? ev.get<std::string>() : ev.dump());
                    first = false;
                }
                os << "\n";
            }
            continue;
        } else
            os << v.dump();
        os << "\n";
    }
}

inline std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << r.command << ": " << r.status << "\n";
    if (!r.inputs.empty()) {
        os << "inputs:\n";
        render_text(os, r.inputs, 2);
    }
    if (!r.outcome.empty()) {
        os << "outcome:\n";
        render_text(os, r.outcome, 2);
    }
    if (!r.seeds.empty()) {
        os << "seeds:";
        for (auto s : r.seeds)
            os << " " << s;
        os << "\n";
    }
    os << "elapsed: " << r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace wid

#endif  // WID_REPORT_HPP
