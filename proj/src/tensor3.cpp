#include "enl/tensor3.hpp"

#include "enl/verdict.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace enl {

bool Tensor3Q::is_zero() const {
  for (const Rat& v : m_a)
    if (v != 0) return false;
  return true;
}

bool Tensor4Q::is_zero() const {
  for (const Rat& v : m_a)
    if (v != 0) return false;
  return true;
}

namespace {

struct Operand {
  const ContractOperand* value;
  std::string labels;

  int order() const {
    if (std::holds_alternative<std::vector<Rat>>(*value)) return 1;
    if (std::holds_alternative<MatrixQ>(*value)) return 2;
    return 3;
  }

  int extent(int axis) const {
    if (const auto* v = std::get_if<std::vector<Rat>>(value)) {
      return static_cast<int>(v->size());
    }
    if (const auto* m = std::get_if<MatrixQ>(value)) {
      return axis == 0 ? m->rows() : m->cols();
    }
    const auto& t = std::get<Tensor3Q>(*value);
    return axis == 0 ? t.d0() : axis == 1 ? t.d1() : t.d2();
  }

  const Rat& entry(const std::vector<int>& idx) const {
    if (const auto* v = std::get_if<std::vector<Rat>>(value)) {
      return (*v)[idx[0]];
    }
    if (const auto* m = std::get_if<MatrixQ>(value)) {
      return m->at(idx[0], idx[1]);
    }
    return std::get<Tensor3Q>(*value).at(idx[0], idx[1], idx[2]);
  }
};

} // namespace

ContractOperand contract(const std::string& plan,
                         const std::vector<ContractOperand>& operands) {
  const size_t arrow = plan.find("->");
  if (arrow == std::string::npos) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "contraction plan lacks '->': " + plan);
  }
  std::vector<std::string> input_labels;
  std::string current;
  for (size_t i = 0; i < arrow; ++i) {
    if (plan[i] == ',') {
      input_labels.push_back(current);
      current.clear();
    } else {
      current += plan[i];
    }
  }
  input_labels.push_back(current);
  const std::string out_labels = plan.substr(arrow + 2);

  if (input_labels.size() != operands.size()) {
    throw EnlError(ErrorKind::ShapeMismatch,
                   "contraction plan arity mismatch: " + plan);
  }

  std::vector<Operand> ops;
  ops.reserve(operands.size());
  for (size_t i = 0; i < operands.size(); ++i) {
    Operand op{&operands[i], input_labels[i]};
    if (static_cast<int>(op.labels.size()) != op.order()) {
      throw EnlError(ErrorKind::ShapeMismatch,
                     "operand rank does not match labels: " + plan);
    }
    ops.push_back(op);
  }

  // Collect every label's extent and verify consistency.
  std::map<char, int> extent;
  for (const Operand& op : ops) {
    for (size_t axis = 0; axis < op.labels.size(); ++axis) {
      const char label = op.labels[axis];
      const int n = op.extent(static_cast<int>(axis));
      auto [it, inserted] = extent.emplace(label, n);
      if (!inserted && it->second != n) {
        throw EnlError(ErrorKind::ShapeMismatch,
                       "inconsistent extents for label in plan: " + plan);
      }
    }
  }
  for (char label : out_labels) {
    if (extent.find(label) == extent.end()) {
      throw EnlError(ErrorKind::ShapeMismatch,
                     "output label not present in inputs: " + plan);
    }
  }

  std::string sum_labels;
  for (const auto& [label, n] : extent) {
    if (out_labels.find(label) == std::string::npos) sum_labels += label;
  }

  // Output storage, flattened row-major over out_labels.
  std::vector<int> out_extents;
  size_t out_size = 1;
  for (char label : out_labels) {
    out_extents.push_back(extent[label]);
    out_size *= static_cast<size_t>(extent[label]);
  }
  std::vector<Rat> out(out_size);

  std::map<char, int> index;
  std::vector<int> idx_buf;
  const auto term = [&]() {
    Rat product = 1;
    for (const Operand& op : ops) {
      idx_buf.clear();
      for (char label : op.labels) idx_buf.push_back(index[label]);
      const Rat& e = op.entry(idx_buf);
      if (e == 0) return Rat(0);
      product *= e;
    }
    return product;
  };

  // Iterate the dense product of all output and summed index ranges.
  std::string all_labels = out_labels + sum_labels;
  std::vector<int> counters(all_labels.size(), 0);
  bool done = false;
  for (const auto& [label, n] : extent) {
    if (n == 0) done = true; // empty ranges: nothing to accumulate
  }
  if (!done && all_labels.empty()) {
    out[0] = term();
    done = true;
  }
  while (!done) {
    for (size_t i = 0; i < all_labels.size(); ++i) {
      index[all_labels[i]] = counters[i];
    }
    size_t flat = 0;
    for (size_t i = 0; i < out_labels.size(); ++i) {
      flat = flat * out_extents[i] + counters[i];
    }
    out[flat] += term();

    int axis = static_cast<int>(all_labels.size()) - 1;
    while (axis >= 0) {
      if (++counters[axis] < extent[all_labels[axis]]) break;
      counters[axis] = 0;
      --axis;
    }
    if (axis < 0) done = true;
  }

  // Package by output rank.
  if (out_labels.size() <= 1) {
    if (out_labels.empty()) return std::vector<Rat>{out[0]};
    return out;
  }
  if (out_labels.size() == 2) {
    MatrixQ m(out_extents[0], out_extents[1]);
    size_t flat = 0;
    for (int i = 0; i < out_extents[0]; ++i)
      for (int j = 0; j < out_extents[1]; ++j) m.at(i, j) = out[flat++];
    return m;
  }
  if (out_labels.size() == 3) {
    Tensor3Q t(out_extents[0], out_extents[1], out_extents[2]);
    size_t flat = 0;
    for (int i = 0; i < out_extents[0]; ++i)
      for (int j = 0; j < out_extents[1]; ++j)
        for (int k = 0; k < out_extents[2]; ++k) t.at(i, j, k) = out[flat++];
    return t;
  }
  throw EnlError(ErrorKind::ShapeMismatch,
                 "output rank above 3 unsupported: " + plan);
}

} // namespace enl
