// SPDX-License-Identifier: Apache-2.0
#include "pathmem/schedule.hpp"

#include <sstream>
#include <stdexcept>

namespace pathmem {

namespace {
void check_args(unsigned lambda, unsigned p) {
  if (p < 1) throw std::invalid_argument("schedule: p must be at least 1");
  if (lambda < p) throw std::invalid_argument("schedule: lambda must be at least p");
}
}  // namespace

std::vector<GenStep> psn_generation_schedule(unsigned lambda, unsigned p) {
  check_args(lambda, p);
  const std::uint32_t words = 1u << (lambda - p);
  std::vector<GenStep> steps;
  steps.reserve(words);
  for (std::uint32_t c = 0; c < words; ++c) {
    const std::uint32_t w = words - 1 - c;
    GenStep st;
    st.cycle = c;
    st.out_word = w;
    st.input0_word = w;
    // Walk the constituent decomposition: the first half of each level is a
    // stored group one stage down, the second half recurses.
    std::uint32_t lo = 0, sz = words;
    unsigned stage = lambda - 1;
    while (true) {
      if (sz == 1) {
        st.input0_stage = p;  // trailing P-bit group
        st.has_input1 = false;
        break;
      }
      const std::uint32_t half = sz / 2;
      if (w < lo + half) {
        st.input0_stage = stage;
        st.has_input1 = true;
        st.input1_word = w + half;
        break;
      }
      lo += half;
      sz = half;
      --stage;
    }
    steps.push_back(st);
  }
  return steps;
}

std::vector<RecoveryStep> recovery_schedule(unsigned lambda, unsigned p) {
  check_args(lambda, p);
  const std::uint32_t words = 1u << (lambda - p);
  std::vector<RecoveryStep> steps;
  std::uint32_t cycle = 0;
  unsigned stage = lambda;
  for (std::uint32_t h = words / 2; h >= 1; h /= 2, --stage) {
    for (std::uint32_t block = 0; block < words; block += 2 * h) {
      for (std::uint32_t k = 0; k < h; ++k) {
        steps.push_back({cycle++, stage, block + k, block + k + h});
      }
    }
    if (h == 1) break;
  }
  return steps;
}

namespace {

std::string word_cell(std::uint32_t word, unsigned stage, std::uint32_t P, bool ascending) {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < P; ++i) {
    if (i) os << ' ';
    const std::uint32_t bit = ascending ? word * P + i : word * P + P - 1 - i;
    os << 's' << bit << '^' << stage;
  }
  return os.str();
}

std::string dash_cell(std::uint32_t P) {
  std::string s;
  for (std::uint32_t i = 0; i < P; ++i) {
    if (i) s += ' ';
    s += '-';
  }
  return s;
}

std::string render_rows(const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& cells, bool csv) {
  std::ostringstream os;
  const std::size_t cols = cells.empty() ? 0 : cells[0].size();
  if (csv) {
    os << "cycle";
    for (const auto& l : labels) os << ',' << l;
    os << '\n';
    for (std::size_t c = 0; c < cols; ++c) {
      os << c;
      for (const auto& row : cells) os << ',' << row[c];
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
  std::size_t label_w = 5;  // "Cycle"
  for (const auto& l : labels) label_w = std::max(label_w, l.size());

  auto pad = [](const std::string& s, std::size_t w) {
    std::string out = s;
    out.resize(w, ' ');
    return out;
  };
  os << pad("Cycle", label_w);
  for (std::size_t c = 0; c < cols; ++c) os << " | " << pad(std::to_string(c), width[c]);
  os << '\n';
  for (std::size_t r = 0; r < labels.size(); ++r) {
    os << pad(labels[r], label_w);
    for (std::size_t c = 0; c < cols; ++c) os << " | " << pad(cells[r][c], width[c]);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_psn_table(unsigned lambda, unsigned p, bool csv) {
  const auto steps = psn_generation_schedule(lambda, p);
  const std::uint32_t P = 1u << p;
  std::vector<std::vector<std::string>> cells(3);
  for (const auto& st : steps) {
    cells[0].push_back(word_cell(st.input0_word, st.input0_stage, P, false));
    cells[1].push_back(st.has_input1 ? word_cell(st.input1_word, lambda, P, false) : dash_cell(P));
    cells[2].push_back(word_cell(st.out_word, lambda, P, false));
  }
  return render_rows({"Input 0", "Input 1", "Output"}, cells, csv);
}

std::string render_recovery_table(unsigned lambda, unsigned p, bool csv) {
  const auto steps = recovery_schedule(lambda, p);
  const std::uint32_t P = 1u << p;
  std::vector<std::vector<std::string>> cells(4);
  for (const auto& st : steps) {
    cells[0].push_back(word_cell(st.xor_word, st.stage_from, P, true));
    cells[1].push_back(word_cell(st.pass_word, st.stage_from, P, true));
    cells[2].push_back(word_cell(st.xor_word, st.stage_from - 1, P, true));
    cells[3].push_back(word_cell(st.pass_word, st.stage_from - 1, P, true));
  }
  return render_rows({"Input 0", "Input 1", "XOR", "Pass"}, cells, csv);
}

}  // namespace pathmem
