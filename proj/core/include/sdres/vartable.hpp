#ifndef SDRES_VARTABLE_HPP
#define SDRES_VARTABLE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdres {

enum class VarKind { Main, Coeff };

struct VarInfo {
  std::string name;
  VarKind kind = VarKind::Main;
  int block = -1;  // owning polynomial index for coeff vars
  int slot = -1;   // slot k within the block
};

// Two-sorted variable table: main vars y_j and coefficient vars u_{ik}.
// Variable index order (main vars first, then coefficient blocks in
// declaration order) is the canonical order used everywhere.
class VarTable {
public:
  int add_main(const std::string& name)
  {
    check_fresh(name);
    if (coeff_count_ > 0)
      throw std::logic_error("main vars must be declared before coeff vars");
    VarInfo v;
    v.name = name;
    v.kind = VarKind::Main;
    index_[name] = static_cast<int>(vars_.size());
    vars_.push_back(v);
    ++main_count_;
    return static_cast<int>(vars_.size()) - 1;
  }

  int add_coeff(const std::string& name, int block, int slot)
  {
    check_fresh(name);
    VarInfo v;
    v.name = name;
    v.kind = VarKind::Coeff;
    v.block = block;
    v.slot = slot;
    auto key = std::make_pair(block, slot);
    if (slot_index_.count(key))
      throw std::logic_error("duplicate coeff slot " + name);
    slot_index_[key] = static_cast<int>(vars_.size());
    index_[name] = static_cast<int>(vars_.size());
    vars_.push_back(v);
    ++coeff_count_;
    return static_cast<int>(vars_.size()) - 1;
  }

  int size() const { return static_cast<int>(vars_.size()); }
  int main_count() const { return main_count_; }
  const VarInfo& info(int i) const { return vars_.at(i); }
  bool is_main(int i) const { return vars_.at(i).kind == VarKind::Main; }

  int find(const std::string& name) const
  {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  int coeff_var(int block, int slot) const
  {
    auto it = slot_index_.find(std::make_pair(block, slot));
    if (it == slot_index_.end())
      throw std::out_of_range("no coeff var for block/slot");
    return it->second;
  }

  bool has_coeff_var(int block, int slot) const
  {
    return slot_index_.count(std::make_pair(block, slot)) > 0;
  }

private:
  void check_fresh(const std::string& name)
  {
    if (name.empty())
      throw std::invalid_argument("empty variable name");
    if (index_.count(name))
      throw std::logic_error("duplicate variable name " + name);
  }

  std::vector<VarInfo> vars_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, int> slot_index_;
  int main_count_ = 0;
  int coeff_count_ = 0;
};

}  // namespace sdres

#endif
