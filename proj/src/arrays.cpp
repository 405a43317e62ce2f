#include "taulab/arrays.hpp"

#include <algorithm>

#include "json.hpp"

namespace taulab {

namespace {

void check_bit(std::uint8_t v, const char* where) {
  if (v != 0 && v != 1) throw InputError(std::string(where) + ": entries must be 0 or 1");
}

}  // namespace

BinaryArray BinaryArray::filled(int r, int c, std::uint8_t bit, std::uint8_t tail_bit) {
  BinaryArray a;
  a.rows = r;
  a.cols = c;
  a.bits.assign(r, std::vector<std::uint8_t>(c, bit));
  a.tail.assign(r, tail_bit);
  return a;
}

void BinaryArray::validate() const {
  if (rows < 0 || cols < 0) throw InputError("array: negative shape");
  if (static_cast<int>(bits.size()) != rows || static_cast<int>(tail.size()) != rows)
    throw InputError("array: bits/tail row count mismatch");
  for (const auto& row : bits) {
    if (static_cast<int>(row.size()) != cols) throw InputError("array: ragged bit rows");
    for (auto v : row) check_bit(v, "array bits");
  }
  for (auto v : tail) check_bit(v, "array tail");
}

void ArrayFamily::validate() const {
  for (const auto& m : members) {
    m.validate();
    if (m.rows != rows() || m.cols != cols())
      throw InputError("family: members must share one shape");
  }
}

BinaryArray make_af(const GrowthFunction& f, int cols) {
  for (int v : f)
    if (v < 0) throw InputError("make_af: f must be non-negative");
  const int maxf = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
  if (cols < maxf)
    throw InputError("make_af: cols (" + std::to_string(cols) + ") below max f (" +
                     std::to_string(maxf) + ")");
  BinaryArray a = BinaryArray::filled(static_cast<int>(f.size()), cols, 0, 1);
  for (int n = 0; n < a.rows; ++n)
    for (int m = f[n]; m < cols; ++m) a.bits[n][m] = 1;
  return a;
}

BinaryArray cmp_array(const BinaryArray& a, const BinaryArray& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InputError("cmp_array: shape mismatch");
  BinaryArray out = a;
  for (int n = 0; n < a.rows; ++n) {
    for (int m = 0; m < a.cols; ++m)
      out.bits[n][m] = std::max<std::uint8_t>(a.bits[n][m], 1 - b.bits[n][m]);
    out.tail[n] = std::max<std::uint8_t>(a.tail[n], 1 - b.tail[n]);
  }
  return out;
}

namespace {

GeneratedArray make_case_split(const InfiniteSetPrefix& t, int rows, int cols, int ell,
                               const std::vector<bool>& chi_row) {
  if (rows < 1 || cols < 1) throw InputError("array generators need rows, cols >= 1");
  for (int v : t.below_horizon)
    if (v < 0 || v >= cols) throw InputError("set prefix element out of column range");
  std::vector<bool> in_t(cols, false);
  for (int v : t.below_horizon) in_t[v] = true;

  GeneratedArray out;
  out.array = BinaryArray::filled(rows, cols, 1, 1);
  for (int n = 0; n < rows; ++n) {
    const bool chi = (ell == 0) ? chi_row[n] : !chi_row[n];
    if (!chi) continue;
    bool any = false;
    for (int m = 0; m < cols; ++m) {
      out.array.bits[n][m] = (in_t[m] && m >= n) ? 1 : 0;
      any = any || out.array.bits[n][m];
    }
    if (!any) out.empty_prefix_rows.push_back(n);
  }
  return out;
}

}  // namespace

GeneratedArray make_tower_arrays(const InfiniteSetPrefix& t, int rows, int cols, int ell) {
  if (ell != 0 && ell != 1) throw InputError("ell must be 0 or 1");
  std::vector<bool> even(rows);
  for (int n = 0; n < rows; ++n) even[n] = n % 2 == 0;
  return make_case_split(t, rows, cols, ell, even);
}

GeneratedArray make_split_arrays(const InfiniteSetPrefix& t, const std::vector<int>& s,
                                 int rows, int cols, int ell) {
  if (ell != 0 && ell != 1) throw InputError("ell must be 0 or 1");
  std::vector<bool> in_s(rows, false);
  for (int v : s) {
    if (v < 0 || v >= rows) throw InputError("row subset element out of range");
    in_s[v] = true;
  }
  return make_case_split(t, rows, cols, ell, in_s);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json array_json(const BinaryArray& a) {
  ordered_json j;
  j["rows"] = a.rows;
  j["cols"] = a.cols;
  j["bits"] = a.bits;
  j["tail"] = a.tail;
  return j;
}

BinaryArray array_from(const ordered_json& j) {
  BinaryArray a;
  try {
    a.rows = j.at("rows").get<int>();
    a.cols = j.at("cols").get<int>();
    a.bits = j.at("bits").get<std::vector<std::vector<std::uint8_t>>>();
    a.tail = j.at("tail").get<std::vector<std::uint8_t>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad array JSON: ") + ex.what());
  }
  a.validate();
  return a;
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad JSON: ") + ex.what());
  }
}

}  // namespace

std::string array_to_json(const BinaryArray& a) { return array_json(a).dump(); }

BinaryArray array_from_json(const std::string& text) { return array_from(parse(text)); }

std::string family_to_json(const ArrayFamily& fam) {
  ordered_json j;
  j["members"] = ordered_json::array();
  for (const auto& m : fam.members) j["members"].push_back(array_json(m));
  return j.dump();
}

ArrayFamily family_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  const ordered_json& arr = j.is_array() ? j : j.at("members");
  ArrayFamily fam;
  for (const auto& item : arr) fam.members.push_back(array_from(item));
  fam.validate();
  return fam;
}

}  // namespace taulab
