#include "crosspart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crosspart {

Partition Partition::from_blocks(std::vector<Mask> blocks) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw std::invalid_argument("partition block must be nonempty");
    if (seen & b) throw std::invalid_argument("partition blocks must be disjoint");
    seen |= b;
  }
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return (a & -a) < (b & -b); });
  Partition p;
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_elements(const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> ms;
  ms.reserve(blocks.size());
  for (const auto& blk : blocks) {
    Mask m = 0;
    for (int e : blk) {
      if (e < 1 || e > kMaxGround) throw std::invalid_argument("element out of range [1,64]");
      m |= element_mask(e);
    }
    ms.push_back(m);
  }
  return from_blocks(std::move(ms));
}

Partition Partition::parse(const std::string& text) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument(std::string("cannot parse partition '") + text + "': " + why);
  };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
  if (i >= text.size() || text[i] != '{') bad("expected '{'");
  i++;
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  std::string num;
  auto flush_num = [&]() {
    if (num.empty()) bad("expected element");
    cur.push_back(std::stoi(num));
    num.clear();
  };
  bool done = false;
  for (; i < text.size() && !done; i++) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num.push_back(c);
    } else if (c == ',') {
      flush_num();
    } else if (c == '|') {
      flush_num();
      blocks.push_back(cur);
      cur.clear();
    } else if (c == '}') {
      if (!num.empty() || !cur.empty()) {
        flush_num();
        blocks.push_back(cur);
        cur.clear();
      }
      done = true;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      bad("unexpected character");
    }
  }
  if (!done) bad("missing '}'");
  for (std::size_t j = i; j < text.size(); j++)
    if (!std::isspace(static_cast<unsigned char>(text[j]))) bad("trailing characters");
  return from_elements(blocks);
}

Mask Partition::union_mask() const {
  Mask u = 0;
  for (Mask b : blocks_) u |= b;
  return u;
}

int Partition::max_element() const {
  Mask u = union_mask();
  return u == 0 ? 0 : 64 - __builtin_clzll(u);
}

bool Partition::contains_block(Mask b) const {
  for (Mask m : blocks_)
    if (m == b) return true;
  return false;
}

int Partition::shared_count(const Partition& other) const {
  // Both lists are sorted by lowest set bit; merge on that key.
  int i = 0, j = 0, c = 0;
  const int na = size(), nb = other.size();
  while (i < na && j < nb) {
    Mask a = blocks_[i], b = other.blocks_[j];
    Mask la = a & -a, lb = b & -b;
    if (la == lb) {
      if (a == b) c++;
      i++;
      j++;
    } else if (la < lb) {
      i++;
    } else {
      j++;
    }
  }
  return c;
}

Partition Partition::shared_blocks(const Partition& other) const {
  std::vector<Mask> out;
  int i = 0, j = 0;
  const int na = size(), nb = other.size();
  while (i < na && j < nb) {
    Mask a = blocks_[i], b = other.blocks_[j];
    Mask la = a & -a, lb = b & -b;
    if (la == lb) {
      if (a == b) out.push_back(a);
      i++;
      j++;
    } else if (la < lb) {
      i++;
    } else {
      j++;
    }
  }
  Partition p;
  p.blocks_ = std::move(out);  // already sorted & disjoint
  return p;
}

bool Partition::subset_of(const Partition& other) const {
  return shared_count(other) == size();
}

Partition Partition::singletons() const {
  std::vector<Mask> out;
  for (Mask b : blocks_)
    if (popcount(b) == 1) out.push_back(b);
  Partition p;
  p.blocks_ = std::move(out);
  return p;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < size(); i++) {
    if (i) os << '|';
    Mask b = blocks_[i];
    bool first = true;
    while (b) {
      int e = min_element(b);
      b &= b - 1;
      if (!first) os << ',';
      os << e;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

bool Partition::rgs_less(const Partition& a, const Partition& b) {
  // Compare the restricted-growth sequences without materializing them: walk
  // elements in increasing order; the block index of element e is the index of
  // the block containing it (blocks are stored in first-appearance order).
  int n = std::max(a.max_element(), b.max_element());
  for (int e = 1; e <= n; e++) {
    Mask em = element_mask(e);
    int ia = -1, ib = -1;
    for (int i = 0; i < a.size(); i++)
      if (a.blocks_[i] & em) {
        ia = i;
        break;
      }
    for (int i = 0; i < b.size(); i++)
      if (b.blocks_[i] & em) {
        ib = i;
        break;
      }
    if (ia != ib) return ia < ib;
  }
  return false;
}

Partition all_singletons(int m) { return singleton_range(1, m); }

Partition singleton_range(int lo, int hi) {
  std::vector<Mask> bs;
  for (int e = lo; e <= hi; e++) bs.push_back(element_mask(e));
  return Partition::from_blocks(std::move(bs));
}

std::vector<int> rgs_of(const Partition& p, int n) {
  if (!p.is_full_partition_of(n)) throw std::invalid_argument("rgs_of: not a full partition of [n]");
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i < p.size(); i++) {
    Mask b = p.blocks()[i];
    while (b) {
      int e = min_element(b);
      b &= b - 1;
      a[static_cast<std::size_t>(e - 1)] = i;
    }
  }
  return a;
}

}  // namespace crosspart
