#include "periodica/reduction.hpp"

namespace periodica {

FiniteReduction reduce_presentation(const Presentation& p, std::size_t max_cosets,
                                    std::size_t max_order) {
  auto table = coset_enumerate(p, max_cosets);
  auto action = coset_action_group(table, max_order);
  action.group.set_label(p.to_string());
  return {std::move(action.group), std::move(action.stabilizer)};
}

FiniteReduction reduce_sublattice(const IntegerMatrix& m, std::size_t max_order) {
  auto q = smith_quotient(m, max_order);
  q.set_label("Z^" + std::to_string(m.rows()) + "/[" + m.to_string() + "]");
  auto h = trivial_subgroup(q);
  return {std::move(q), std::move(h)};
}

}  // namespace periodica
