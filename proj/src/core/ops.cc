// Copyright 2026 The spanfeat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spanfeat/core/ops.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spanfeat {
namespace {

void RequireSameShape(const char* op, Var a, Var b) {
  if (a.shape() != b.shape()) {
    throw ShapeError(std::string(op) + ": shape mismatch " +
                     a.tensor().ShapeString() + " vs " +
                     b.tensor().ShapeString());
  }
}

void RequireMatrix(const char* op, Var x) {
  if (x.tensor().rank() != 2) {
    throw ShapeError(std::string(op) + ": expected a matrix, got " +
                     x.tensor().ShapeString());
  }
}

template <typename Forward, typename Derivative>
Var Elementwise(Tape& tape, Var x, Forward forward, Derivative derivative) {
  Var out = tape.Allocate(x.shape());
  auto xv = x.tensor().values();
  auto ov = out.tensor().values();
  for (size_t i = 0; i < xv.size(); ++i) ov[i] = forward(xv[i]);
  tape.Record([x, out, derivative]() {
    auto xg = x.tensor().grad();
    auto og = out.tensor().grad();
    auto ov = out.tensor().values();
    auto xv = x.tensor().values();
    for (size_t i = 0; i < xg.size(); ++i) {
      xg[i] += og[i] * derivative(xv[i], ov[i]);
    }
  });
  return out;
}

double SigmoidValue(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double LogSumExp(std::span<const double> values) {
  double max = -std::numeric_limits<double>::infinity();
  for (double v : values) max = std::max(max, v);
  if (std::isinf(max)) return max;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - max);
  return max + std::log(sum);
}

Var MatMul(Tape& tape, Var a, Var b) {
  RequireMatrix("matmul", b);
  const bool vector_input = a.tensor().rank() == 1;
  if (!vector_input) RequireMatrix("matmul", a);
  const int m = vector_input ? 1 : a.tensor().dim(0);
  const int p = a.cols();
  const int q = b.cols();
  if (b.tensor().dim(0) != p) {
    throw ShapeError("matmul: inner dimensions differ, " +
                     a.tensor().ShapeString() + " x " +
                     b.tensor().ShapeString());
  }
  Var out = vector_input ? tape.Allocate({q}) : tape.Allocate({m, q});
  const double* av = a.tensor().values().data();
  const double* bv = b.tensor().values().data();
  double* ov = out.tensor().values().data();
  for (int i = 0; i < m; ++i) {
    double* orow = ov + static_cast<size_t>(i) * q;
    for (int k = 0; k < p; ++k) {
      const double aik = av[static_cast<size_t>(i) * p + k];
      const double* brow = bv + static_cast<size_t>(k) * q;
      for (int j = 0; j < q; ++j) orow[j] += aik * brow[j];
    }
  }
  tape.Record([a, b, out, m, p, q]() {
    const double* av = a.tensor().values().data();
    const double* bv = b.tensor().values().data();
    const double* og = out.tensor().grad().data();
    double* ag = a.tensor().grad().data();
    double* bg = b.tensor().grad().data();
    for (int i = 0; i < m; ++i) {
      const double* grow = og + static_cast<size_t>(i) * q;
      for (int k = 0; k < p; ++k) {
        const double* brow = bv + static_cast<size_t>(k) * q;
        double* bgrow = bg + static_cast<size_t>(k) * q;
        const double aik = av[static_cast<size_t>(i) * p + k];
        double acc = 0.0;
        for (int j = 0; j < q; ++j) {
          acc += grow[j] * brow[j];
          bgrow[j] += aik * grow[j];
        }
        ag[static_cast<size_t>(i) * p + k] += acc;
      }
    }
  });
  return out;
}

Var Add(Tape& tape, Var a, Var b) {
  RequireSameShape("add", a, b);
  Var out = tape.Allocate(a.shape());
  auto ov = out.tensor().values();
  auto av = a.tensor().values();
  auto bv = b.tensor().values();
  for (size_t i = 0; i < ov.size(); ++i) ov[i] = av[i] + bv[i];
  tape.Record([a, b, out]() {
    auto og = out.tensor().grad();
    auto ag = a.tensor().grad();
    auto bg = b.tensor().grad();
    for (size_t i = 0; i < og.size(); ++i) {
      ag[i] += og[i];
      bg[i] += og[i];
    }
  });
  return out;
}

Var AddBias(Tape& tape, Var x, Var bias) {
  if (bias.tensor().rank() != 1 || bias.cols() != x.cols()) {
    throw ShapeError("add_bias: bias " + bias.tensor().ShapeString() +
                     " does not match " + x.tensor().ShapeString());
  }
  Var out = tape.Allocate(x.shape());
  const int rows = x.rows();
  const int cols = x.cols();
  for (int r = 0; r < rows; ++r) {
    auto xr = x.tensor().row(r);
    auto orow = out.tensor().row(r);
    auto bv = bias.tensor().values();
    for (int c = 0; c < cols; ++c) orow[c] = xr[c] + bv[c];
  }
  tape.Record([x, bias, out, rows, cols]() {
    auto og = out.tensor().grad();
    auto xg = x.tensor().grad();
    auto bg = bias.tensor().grad();
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const double g = og[static_cast<size_t>(r) * cols + c];
        xg[static_cast<size_t>(r) * cols + c] += g;
        bg[c] += g;
      }
    }
  });
  return out;
}

Var Scale(Tape& tape, Var x, double factor) {
  Var out = tape.Allocate(x.shape());
  auto xv = x.tensor().values();
  auto ov = out.tensor().values();
  for (size_t i = 0; i < xv.size(); ++i) ov[i] = xv[i] * factor;
  tape.Record([x, out, factor]() {
    auto og = out.tensor().grad();
    auto xg = x.tensor().grad();
    for (size_t i = 0; i < og.size(); ++i) xg[i] += og[i] * factor;
  });
  return out;
}

Var SumScalars(Tape& tape, std::span<const Var> scalars) {
  Var out = tape.Allocate({1});
  double total = 0.0;
  for (const Var& s : scalars) total += s.scalar();
  out.tensor()[0] = total;
  std::vector<Var> inputs(scalars.begin(), scalars.end());
  tape.Record([inputs, out]() {
    const double g = out.tensor().grad()[0];
    for (const Var& s : inputs) s.tensor().grad()[0] += g;
  });
  return out;
}

Var WeightedSum(Tape& tape, Var x, const Tensor& weights) {
  if (weights.size() != x.size()) {
    throw ShapeError("weighted_sum: " + weights.ShapeString() + " vs " +
                     x.tensor().ShapeString());
  }
  Var out = tape.Allocate({1});
  auto xv = x.tensor().values();
  auto wv = weights.values();
  double total = 0.0;
  for (size_t i = 0; i < xv.size(); ++i) total += xv[i] * wv[i];
  out.tensor()[0] = total;
  std::vector<double> w(wv.begin(), wv.end());
  tape.Record([x, out, w = std::move(w)]() {
    const double g = out.tensor().grad()[0];
    auto xg = x.tensor().grad();
    for (size_t i = 0; i < xg.size(); ++i) xg[i] += g * w[i];
  });
  return out;
}

Var Relu(Tape& tape, Var x) {
  return Elementwise(
      tape, x, [](double v) { return v > 0 ? v : 0.0; },
      [](double in, double) { return in > 0 ? 1.0 : 0.0; });
}

Var Tanh(Tape& tape, Var x) {
  return Elementwise(
      tape, x, [](double v) { return std::tanh(v); },
      [](double, double out) { return 1.0 - out * out; });
}

Var Sigmoid(Tape& tape, Var x) {
  return Elementwise(tape, x, SigmoidValue,
                     [](double, double out) { return out * (1.0 - out); });
}

Var Conv1dSame(Tape& tape, Var seq, Var filters, Var bias) {
  RequireMatrix("conv1d", seq);
  if (filters.tensor().rank() != 3) {
    throw ShapeError("conv1d: filters must be [w x e x f], got " +
                     filters.tensor().ShapeString());
  }
  const int n = seq.tensor().dim(0);
  const int e = seq.tensor().dim(1);
  const int w = filters.tensor().dim(0);
  const int f = filters.tensor().dim(2);
  if (filters.tensor().dim(1) != e) {
    throw ShapeError("conv1d: embedding width mismatch, sequence " +
                     seq.tensor().ShapeString() + " vs filters " +
                     filters.tensor().ShapeString());
  }
  if (bias.tensor().rank() != 1 || bias.cols() != f) {
    throw ShapeError("conv1d: bias " + bias.tensor().ShapeString() +
                     " does not match " + std::to_string(f) + " filters");
  }
  const int left = w / 2;
  Var out = tape.Allocate({n, f});
  const double* sv = seq.tensor().values().data();
  const double* fv = filters.tensor().values().data();
  const double* bv = bias.tensor().values().data();
  double* ov = out.tensor().values().data();
  for (int t = 0; t < n; ++t) {
    double* orow = ov + static_cast<size_t>(t) * f;
    for (int j = 0; j < f; ++j) orow[j] = bv[j];
    for (int k = 0; k < w; ++k) {
      const int src = t + k - left;
      if (src < 0 || src >= n) continue;
      const double* in = sv + static_cast<size_t>(src) * e;
      const double* fk = fv + static_cast<size_t>(k) * e * f;
      for (int c = 0; c < e; ++c) {
        const double x = in[c];
        const double* fkc = fk + static_cast<size_t>(c) * f;
        for (int j = 0; j < f; ++j) orow[j] += x * fkc[j];
      }
    }
  }
  tape.Record([seq, filters, bias, out, n, e, w, f, left]() {
    const double* sv = seq.tensor().values().data();
    const double* fv = filters.tensor().values().data();
    const double* og = out.tensor().grad().data();
    double* sg = seq.tensor().grad().data();
    double* fg = filters.tensor().grad().data();
    double* bg = bias.tensor().grad().data();
    for (int t = 0; t < n; ++t) {
      const double* grow = og + static_cast<size_t>(t) * f;
      for (int j = 0; j < f; ++j) bg[j] += grow[j];
      for (int k = 0; k < w; ++k) {
        const int src = t + k - left;
        if (src < 0 || src >= n) continue;
        const double* in = sv + static_cast<size_t>(src) * e;
        double* in_g = sg + static_cast<size_t>(src) * e;
        const size_t base = static_cast<size_t>(k) * e * f;
        for (int c = 0; c < e; ++c) {
          const double* fkc = fv + base + static_cast<size_t>(c) * f;
          double* fgkc = fg + base + static_cast<size_t>(c) * f;
          const double x = in[c];
          double acc = 0.0;
          for (int j = 0; j < f; ++j) {
            acc += fkc[j] * grow[j];
            fgkc[j] += x * grow[j];
          }
          in_g[c] += acc;
        }
      }
    }
  });
  return out;
}

Var MaxOverTime(Tape& tape, Var seq) {
  RequireMatrix("max_over_time", seq);
  const int n = seq.tensor().dim(0);
  const int f = seq.tensor().dim(1);
  Var out = tape.Allocate({f});
  std::vector<int> argmax(f, 0);
  auto ov = out.tensor().values();
  for (int j = 0; j < f; ++j) ov[j] = seq.tensor().at(0, j);
  for (int t = 1; t < n; ++t) {
    auto r = seq.tensor().row(t);
    for (int j = 0; j < f; ++j) {
      if (r[j] > ov[j]) {
        ov[j] = r[j];
        argmax[j] = t;
      }
    }
  }
  tape.Record([seq, out, argmax = std::move(argmax), f]() {
    auto og = out.tensor().grad();
    auto sg = seq.tensor().grad();
    for (int j = 0; j < f; ++j) {
      sg[static_cast<size_t>(argmax[j]) * f + j] += og[j];
    }
  });
  return out;
}

Var Concat(Tape& tape, std::span<const Var> parts) {
  if (parts.empty()) throw ShapeError("concat: no inputs");
  const int rank = parts[0].tensor().rank();
  const int rows = parts[0].rows();
  int total = 0;
  for (const Var& p : parts) {
    if (p.tensor().rank() != rank || p.rows() != rows) {
      throw ShapeError("concat: leading dimensions differ, " +
                       parts[0].tensor().ShapeString() + " vs " +
                       p.tensor().ShapeString());
    }
    total += p.cols();
  }
  std::vector<int> shape = parts[0].shape();
  shape.back() = total;
  Var out = tape.Allocate(shape);
  int offset = 0;
  for (const Var& p : parts) {
    const int c = p.cols();
    for (int r = 0; r < rows; ++r) {
      auto src = p.tensor().row(r);
      std::copy(src.begin(), src.end(), out.tensor().row(r).begin() + offset);
    }
    offset += c;
  }
  std::vector<Var> inputs(parts.begin(), parts.end());
  tape.Record([inputs, out, rows, total]() {
    auto og = out.tensor().grad();
    int offset = 0;
    for (const Var& p : inputs) {
      const int c = p.cols();
      auto pg = p.tensor().grad();
      for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < c; ++j) {
          pg[static_cast<size_t>(r) * c + j] +=
              og[static_cast<size_t>(r) * total + offset + j];
        }
      }
      offset += c;
    }
  });
  return out;
}

Var GatherRows(Tape& tape, Var x, std::span<const int> rows) {
  RequireMatrix("gather_rows", x);
  if (rows.empty()) throw ShapeError("gather_rows: empty row selection");
  const int n = x.tensor().dim(0);
  const int e = x.cols();
  for (int r : rows) {
    if (r < 0 || r >= n) {
      throw std::out_of_range("gather_rows: row " + std::to_string(r) +
                              " outside " + x.tensor().ShapeString());
    }
  }
  Var out = tape.Allocate({static_cast<int>(rows.size()), e});
  for (size_t i = 0; i < rows.size(); ++i) {
    auto src = x.tensor().row(rows[i]);
    std::copy(src.begin(), src.end(), out.tensor().row(static_cast<int>(i)).begin());
  }
  std::vector<int> index(rows.begin(), rows.end());
  tape.Record([x, out, index = std::move(index), e]() {
    auto og = out.tensor().grad();
    auto xg = x.tensor().grad();
    for (size_t i = 0; i < index.size(); ++i) {
      for (int j = 0; j < e; ++j) {
        xg[static_cast<size_t>(index[i]) * e + j] += og[i * e + j];
      }
    }
  });
  return out;
}

Var StackRows(Tape& tape, std::span<const Var> rows) {
  if (rows.empty()) throw ShapeError("stack_rows: no inputs");
  const int e = static_cast<int>(rows[0].size());
  for (const Var& r : rows) {
    if (static_cast<int>(r.size()) != e) {
      throw ShapeError("stack_rows: row sizes differ, " +
                       rows[0].tensor().ShapeString() + " vs " +
                       r.tensor().ShapeString());
    }
  }
  Var out = tape.Allocate({static_cast<int>(rows.size()), e});
  for (size_t i = 0; i < rows.size(); ++i) {
    auto src = rows[i].tensor().values();
    std::copy(src.begin(), src.end(), out.tensor().row(static_cast<int>(i)).begin());
  }
  std::vector<Var> inputs(rows.begin(), rows.end());
  tape.Record([inputs, out, e]() {
    auto og = out.tensor().grad();
    for (size_t i = 0; i < inputs.size(); ++i) {
      auto g = inputs[i].tensor().grad();
      for (int j = 0; j < e; ++j) g[j] += og[i * e + j];
    }
  });
  return out;
}

Var Row(Tape& tape, Var x, int r) {
  RequireMatrix("row", x);
  if (r < 0 || r >= x.tensor().dim(0)) {
    throw std::out_of_range("row: index " + std::to_string(r) + " outside " +
                            x.tensor().ShapeString());
  }
  const int e = x.cols();
  Var out = tape.Allocate({e});
  auto src = x.tensor().row(r);
  std::copy(src.begin(), src.end(), out.tensor().values().begin());
  tape.Record([x, out, r, e]() {
    auto og = out.tensor().grad();
    auto xg = x.tensor().grad_row(r);
    for (int j = 0; j < e; ++j) xg[j] += og[j];
  });
  return out;
}

Var EmbeddingLookup(Tape& tape, Var table, std::span<const int> ids) {
  RequireMatrix("embedding_lookup", table);
  const int vocab = table.tensor().dim(0);
  for (int id : ids) {
    if (id < 0 || id >= vocab) {
      throw std::out_of_range("embedding_lookup: id " + std::to_string(id) +
                              " outside table " + table.tensor().ShapeString());
    }
  }
  return GatherRows(tape, table, ids);
}

LstmState LstmCell(Tape& tape, Var x, Var h_prev, Var c_prev,
                   const LstmWeights& weights) {
  const int h = static_cast<int>(h_prev.size());
  const int e = static_cast<int>(x.size());
  const Tensor& wx = weights.input.tensor();
  const Tensor& wh = weights.recurrent.tensor();
  const Tensor& b = weights.bias.tensor();
  if (wx.rank() != 2 || wx.dim(0) != e || wx.dim(1) != 4 * h ||
      wh.rank() != 2 || wh.dim(0) != h || wh.dim(1) != 4 * h ||
      b.size() != static_cast<size_t>(4 * h) ||
      c_prev.size() != static_cast<size_t>(h)) {
    throw ShapeError("lstm_cell: input " + x.tensor().ShapeString() +
                     ", state " + h_prev.tensor().ShapeString() +
                     " incompatible with weights " + wx.ShapeString() + ", " +
                     wh.ShapeString() + ", " + b.ShapeString());
  }
  const int g4 = 4 * h;
  // Gate activations after their nonlinearity, laid out [i | f | g | o].
  std::vector<double> act(b.values().begin(), b.values().end());
  const double* xv = x.tensor().values().data();
  const double* hv = h_prev.tensor().values().data();
  for (int k = 0; k < e; ++k) {
    const double xk = xv[k];
    const double* row = wx.values().data() + static_cast<size_t>(k) * g4;
    for (int j = 0; j < g4; ++j) act[j] += xk * row[j];
  }
  for (int k = 0; k < h; ++k) {
    const double hk = hv[k];
    const double* row = wh.values().data() + static_cast<size_t>(k) * g4;
    for (int j = 0; j < g4; ++j) act[j] += hk * row[j];
  }
  for (int j = 0; j < h; ++j) {
    act[j] = SigmoidValue(act[j]);
    act[h + j] = SigmoidValue(act[h + j]);
    act[2 * h + j] = std::tanh(act[2 * h + j]);
    act[3 * h + j] = SigmoidValue(act[3 * h + j]);
  }
  Var h_out = tape.Allocate({h});
  Var c_out = tape.Allocate({h});
  std::vector<double> tanh_c(h);
  auto cp = c_prev.tensor().values();
  for (int j = 0; j < h; ++j) {
    const double c = act[h + j] * cp[j] + act[j] * act[2 * h + j];
    c_out.tensor()[j] = c;
    tanh_c[j] = std::tanh(c);
    h_out.tensor()[j] = act[3 * h + j] * tanh_c[j];
  }
  tape.Record([x, h_prev, c_prev, weights, h_out, c_out, act = std::move(act),
               tanh_c = std::move(tanh_c), h, e, g4]() {
    auto dh = h_out.tensor().grad();
    auto dc_in = c_out.tensor().grad();
    auto cp = c_prev.tensor().values();
    std::vector<double> dz(g4);
    auto cpg = c_prev.tensor().grad();
    for (int j = 0; j < h; ++j) {
      const double i = act[j], f = act[h + j], g = act[2 * h + j],
                   o = act[3 * h + j];
      const double dc = dc_in[j] + dh[j] * o * (1.0 - tanh_c[j] * tanh_c[j]);
      dz[j] = dc * g * i * (1.0 - i);
      dz[h + j] = dc * cp[j] * f * (1.0 - f);
      dz[2 * h + j] = dc * i * (1.0 - g * g);
      dz[3 * h + j] = dh[j] * tanh_c[j] * o * (1.0 - o);
      cpg[j] += dc * f;
    }
    auto bg = weights.bias.tensor().grad();
    for (int j = 0; j < g4; ++j) bg[j] += dz[j];
    const double* xv = x.tensor().values().data();
    const double* hv = h_prev.tensor().values().data();
    const double* wxv = weights.input.tensor().values().data();
    const double* whv = weights.recurrent.tensor().values().data();
    double* wxg = weights.input.tensor().grad().data();
    double* whg = weights.recurrent.tensor().grad().data();
    auto xg = x.tensor().grad();
    auto hg = h_prev.tensor().grad();
    for (int k = 0; k < e; ++k) {
      const size_t base = static_cast<size_t>(k) * g4;
      double acc = 0.0;
      for (int j = 0; j < g4; ++j) {
        acc += wxv[base + j] * dz[j];
        wxg[base + j] += xv[k] * dz[j];
      }
      xg[k] += acc;
    }
    for (int k = 0; k < h; ++k) {
      const size_t base = static_cast<size_t>(k) * g4;
      double acc = 0.0;
      for (int j = 0; j < g4; ++j) {
        acc += whv[base + j] * dz[j];
        whg[base + j] += hv[k] * dz[j];
      }
      hg[k] += acc;
    }
  });
  return {h_out, c_out};
}

Var SoftmaxCrossEntropy(Tape& tape, Var logits, int gold) {
  const int c = static_cast<int>(logits.size());
  if (gold < 0 || gold >= c) {
    throw std::out_of_range("softmax_cross_entropy: gold label " +
                            std::to_string(gold) + " outside [0, " +
                            std::to_string(c) + ")");
  }
  auto lv = logits.tensor().values();
  const double lse = LogSumExp(lv);
  Var out = tape.Allocate({1});
  out.tensor()[0] = lse - lv[gold];
  std::vector<double> probs(c);
  for (int j = 0; j < c; ++j) probs[j] = std::exp(lv[j] - lse);
  tape.Record([logits, out, probs = std::move(probs), gold]() {
    const double g = out.tensor().grad()[0];
    auto lg = logits.tensor().grad();
    for (size_t j = 0; j < probs.size(); ++j) {
      lg[j] += g * (probs[j] - (static_cast<int>(j) == gold ? 1.0 : 0.0));
    }
  });
  return out;
}

}  // namespace spanfeat
