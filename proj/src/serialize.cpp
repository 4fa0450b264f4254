#include "periodica/serialize.hpp"

namespace periodica {

using nlohmann::ordered_json;

ordered_json to_json(const CountReport& report) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : report.terms) {
    terms.push_back({{"subgroup_members", t.subgroup_members},
                     {"mu", to_string(t.mu)},
                     {"index", t.index}});
  }
  return {{"group", report.group_label},
          {"subgroup_members", report.subgroup_members},
          {"q", report.q},
          {"index", report.index},
          {"class_size", report.class_size},
          {"psi", to_string(report.psi)},
          {"psi_class", to_string(report.psi_class)},
          {"alpha", to_string(report.alpha)},
          {"terms", terms}};
}

ordered_json to_json(const AutDescription& aut) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : aut.factors) {
    factors.push_back({{"class", f.class_index},
                       {"representative", f.representative},
                       {"index", f.index},
                       {"quotient", f.quotient.name()},
                       {"quotient_order", f.quotient.order},
                       {"alpha", to_string(f.alpha)}});
  }
  return {{"group", aut.group_label}, {"q", aut.q}, {"factors", factors}};
}

ordered_json to_json(const SmallValueTable& table) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    ordered_json values = ordered_json::object();
    for (std::size_t c = 0; c < table.qs.size(); ++c) {
      values["q" + std::to_string(table.qs[c])] = to_string(table.alpha[r][c]);
    }
    rows.push_back({{"group", table.rows[r]}, {"alpha", values}});
  }
  return rows;
}

ordered_json to_json(const SmallAlphaClassification& result) {
  ordered_json values = ordered_json::array();
  for (std::uint64_t v = 1; v <= result.alpha_max; ++v) {
    ordered_json attained = ordered_json::array();
    for (const auto& e : result.attaining(v)) {
      attained.push_back({{"group", e.group}, {"order", e.order}, {"q", e.q}});
    }
    values.push_back({{"alpha", v}, {"attained_by", attained}});
  }
  ordered_json rows = ordered_json::array();
  for (const auto& r : result.certificate.rows) {
    rows.push_back({{"q", r.q},
                    {"orders_scanned", {2, r.last_order}},
                    {"stop_order", r.stop_order},
                    {"stop_bound", r.stop_bound.to_string()}});
  }
  return {{"alpha_max", result.alpha_max},
          {"values", values},
          {"certificate",
           {{"rows", rows},
            {"stop_q", result.certificate.stop_q},
            {"stop_bound", result.certificate.stop_bound.to_string()},
            {"cells_examined", result.certificate.cells_examined}}}};
}

ordered_json to_json(const LowIndexClass& cls, const Presentation& p) {
  ordered_json images = ordered_json::object();
  auto perms = cls.table.generator_permutations();
  for (std::size_t g = 0; g < perms.size(); ++g) images[p.generators[g]] = perms[g];
  return {{"index", cls.index}, {"conjugates", cls.conjugates}, {"generator_images", images}};
}

}  // namespace periodica
