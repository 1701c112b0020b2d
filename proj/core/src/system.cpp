#include <sdres/system.hpp>

#include <set>
#include <stdexcept>

namespace sdres {

GenericSystem::GenericSystem(std::shared_ptr<VarTable> table,
                             std::vector<std::vector<LaurentMonomial>> supports)
    : table_(std::move(table)), supports_(std::move(supports))
{
  validate();
  for (int i = 0; i < poly_count(); ++i) {
    std::vector<Term> ts;
    for (int k = 0; k < block_size(i); ++k) {
      SVar u{table_->coeff_var(i, k), 0};
      ts.push_back({supports_[i][static_cast<std::size_t>(k)].mul(LaurentMonomial::var(u)), Rat(1)});
    }
    polys_.push_back(DiffPoly::from_terms(std::move(ts)));

    // clearing monomial of the main-var part
    std::vector<Term> mains;
    for (const auto& m : supports_[static_cast<std::size_t>(i)])
      mains.push_back({m, Rat(1)});
    NormForm nf = norm_form(DiffPoly::from_terms(std::move(mains)), *table_);
    std::vector<LaurentMonomial> slots;
    for (const auto& m : supports_[static_cast<std::size_t>(i)])
      slots.push_back(m.mul(nf.clearing));
    norm_polys_.push_back(polys_.back().mul_monomial(nf.clearing));
    norm_slots_.push_back(std::move(slots));

    int best = 0;
    for (int k = 1; k < block_size(i); ++k)
      if (norm_slots_.back()[static_cast<std::size_t>(k)].total_degree() <
          norm_slots_.back()[static_cast<std::size_t>(best)].total_degree())
        best = k;
    min_slot_.push_back(best);
  }
}

void GenericSystem::validate() const
{
  if (table_->main_count() < 1)
    throw std::invalid_argument("system needs at least one main variable");
  for (int i = 0; i < poly_count(); ++i) {
    if (block_size(i) < 2)
      throw std::invalid_argument("every support needs l_i >= 1");
    std::set<LaurentMonomial> seen;
    for (const auto& m : supports_[static_cast<std::size_t>(i)]) {
      for (const auto& [v, e] : m.exponents()) {
        if (!table_->is_main(v.var))
          throw std::invalid_argument("support monomials must use main vars only");
      }
      if (!seen.insert(m).second)
        throw std::invalid_argument("duplicate monomial in one support");
    }
    for (int k = 0; k < block_size(i); ++k)
      table_->coeff_var(i, k);  // throws when a slot var is missing
  }
}

ExtInt GenericSystem::norm_order(int i) const
{
  ExtInt s = ExtInt::neg_inf();
  for (int j = 0; j < table_->main_count(); ++j)
    s = ext_max(s, order_stats(norm_polys_.at(i), j).ord);
  return s;
}

}  // namespace sdres
